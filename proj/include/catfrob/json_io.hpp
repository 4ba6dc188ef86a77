#ifndef CATFROB_JSON_IO_HPP
#define CATFROB_JSON_IO_HPP

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "algebra_objects.hpp"
#include "finset.hpp"
#include "finvect.hpp"
#include "grvect.hpp"
#include "law_report.hpp"

namespace catfrob {

using json = nlohmann::json;

/// Raised by the structure-constant loader. `kind` is "parse", "degree" or
/// "axiom"; for axiom failures `law` names the failing law.
class LoadError : public ConstructionError {
 public:
  LoadError(std::string kind, const std::string& what, std::string law = {}, std::optional<std::size_t> index = {})
      : ConstructionError(what), kind(std::move(kind)), law(std::move(law)), index(index) {}
  std::string kind;
  std::string law;
  std::optional<std::size_t> index;
};

inline json matrix_to_json(const RationalMatrix& m) { return m.to_strings(); }

inline json vector_to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j).str());
  return out;
}

namespace detail {

inline Rational rational_from_json(const json& v, const std::string& what) {
  if (!v.is_string()) throw LoadError("parse", what + ": entries must be \"p/q\" strings");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const ContractViolation& e) {
    throw LoadError("parse", what + ": " + e.what());
  }
}

}  // namespace detail

inline RationalMatrix matrix_from_json(const json& v, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!v.is_array() || v.size() != rows)
    throw LoadError("parse", what + ": expected " + std::to_string(rows) + " rows");
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].size() != cols)
      throw LoadError("parse", what + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, detail::rational_from_json(v[i][j], what));
  }
  return m;
}

/// A flat array of n entries read as an n x 1 (column) or 1 x n (row) matrix.
inline RationalMatrix vector_from_json(const json& v, std::size_t n, bool column, const std::string& what) {
  if (!v.is_array() || v.size() != n)
    throw LoadError("parse", what + ": expected an array of " + std::to_string(n) + " entries");
  RationalMatrix m = column ? RationalMatrix(n, 1) : RationalMatrix(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational r = detail::rational_from_json(v[i], what);
    if (column) m.set(i, 0, r);
    else m.set(0, i, r);
  }
  return m;
}

using AnyHopf = std::variant<HopfAlgebraData<FinVect>, HopfAlgebraData<GrVect>, HopfAlgebraData<FinSet>>;

namespace detail {

inline RationalMatrix finset_matrix(const FinSet::Mor& f) {
  return RationalMatrix::from_function(f.cod.size, f.table);
}

inline FinSet::Mor finset_from_matrix(const FinSet& c, const FinSet::Obj& dom, const FinSet::Obj& cod,
                                      const RationalMatrix& m, const std::string& what) {
  std::vector<std::size_t> table(dom.size);
  for (std::size_t j = 0; j < dom.size; ++j) {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < cod.size; ++i) {
      Rational v = m.at(i, j);
      if (v.is_zero()) continue;
      if (!v.is_one() || hit) throw LoadError("parse", what + ": column " + std::to_string(j) + " is not a function value");
      hit = i;
    }
    if (!hit) throw LoadError("parse", what + ": column " + std::to_string(j) + " is not a function value");
    table[j] = *hit;
  }
  return c.make(dom, cod, std::move(table));
}

template <class C>
json hopf_common(const HopfAlgebraData<C>& h, const RationalMatrix& m, const RationalMatrix& u,
                 const RationalMatrix& d, const RationalMatrix& e, const RationalMatrix& s) {
  json j;
  j["name"] = h.name;
  j["category"] = C::kind;
  j["m"] = matrix_to_json(m);
  j["u"] = vector_to_json(u);
  j["d"] = matrix_to_json(d);
  j["e"] = vector_to_json(e);
  j["s"] = matrix_to_json(s);
  return j;
}

}  // namespace detail

inline json hopf_to_json(const HopfAlgebraData<FinVect>& h) {
  const auto& c = h.cat;
  json j = detail::hopf_common(h, c.matrix(h.m), c.matrix(h.u), c.matrix(h.d), c.matrix(h.e), c.matrix(h.s));
  j["dim"] = h.carrier.dim;
  return j;
}

inline json hopf_to_json(const HopfAlgebraData<GrVect>& h) {
  const auto& c = h.cat;
  json j = detail::hopf_common(h, c.matrix(h.m), c.matrix(h.u), c.matrix(h.d), c.matrix(h.e), c.matrix(h.s));
  j["dims"] = {h.carrier.even(), h.carrier.odd()};
  return j;
}

inline json hopf_to_json(const HopfAlgebraData<FinSet>& h) {
  using detail::finset_matrix;
  json j = detail::hopf_common(h, finset_matrix(h.m), finset_matrix(h.u), finset_matrix(h.d), finset_matrix(h.e),
                               finset_matrix(h.s));
  j["dim"] = h.carrier.size;
  return j;
}

inline json any_hopf_to_json(const AnyHopf& h) {
  return std::visit([](const auto& x) { return hopf_to_json(x); }, h);
}

namespace detail {

inline bool is_flat(const json& j) {
  return std::none_of(j.begin(), j.end(), [](const json& v) { return v.is_structured(); });
}

inline void write_compact(std::ostream& out, const json& j, int indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    out << "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out << pad << json(k).dump() << ": ";
      write_compact(out, v, indent + 2);
      out << (++i < j.size() ? ",\n" : "\n");
    }
    out << std::string(indent, ' ') << "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad;
      write_compact(out, j[i], indent + 2);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << std::string(indent, ' ') << "]";
  } else {
    out << j.dump(-1, ' ', false);
  }
}

}  // namespace detail

/// Pretty-printed JSON with sorted keys in which arrays of scalars stay on one
/// line, so a matrix prints one row per line.
inline std::string compact_dump(const json& j) {
  std::ostringstream out;
  detail::write_compact(out, j, 0);
  out << "\n";
  return out.str();
}

namespace detail {

template <class C, class Make>
HopfAlgebraData<C> hopf_from_json(const json& j, const C& c, const typename C::Obj& a, std::size_t n, Make make) {
  HopfAlgebraData<C> h{j.value("name", std::string("unnamed")), c, a, {}, {}, {}, {}, {}};
  auto aa = c.tensor(a, a);
  auto one = c.unit();
  h.m = make(aa, a, matrix_from_json(j.at("m"), n, n * n, "m"), "m");
  h.u = make(one, a, vector_from_json(j.at("u"), n, true, "u"), "u");
  h.d = make(a, aa, matrix_from_json(j.at("d"), n * n, n, "d"), "d");
  h.e = make(a, one, vector_from_json(j.at("e"), n, false, "e"), "e");
  h.s = make(a, a, matrix_from_json(j.at("s"), n, n, "s"), "s");
  return h;
}

inline std::size_t dim_from_json(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) throw LoadError("parse", std::string("missing or invalid \"") + key + "\"");
  return j[key].get<std::size_t>();
}

}  // namespace detail

/// Parses structure constants without checking the Hopf axioms.
inline AnyHopf parse_structure_constants(const json& j) {
  try {
    if (!j.is_object()) throw LoadError("parse", "top level must be an object");
    for (const char* key : {"m", "u", "d", "e", "s"})
      if (!j.contains(key)) throw LoadError("parse", std::string("missing \"") + key + "\"");
    const std::string cat = j.value("category", std::string());
    if (cat == "finvect") {
      FinVect c;
      std::size_t n = detail::dim_from_json(j, "dim");
      return detail::hopf_from_json(j, c, FinVect::obj(n), n,
                                    [&](auto dom, auto cod, RationalMatrix m, const std::string&) {
                                      return c.from_matrix(dom, cod, std::move(m));
                                    });
    }
    if (cat == "grvect") {
      GrVect c;
      if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 2 || !j["dims"][0].is_number_unsigned() ||
          !j["dims"][1].is_number_unsigned())
        throw LoadError("parse", "\"dims\" must be [even, odd]");
      auto a = GrVect::obj(j["dims"][0].get<std::size_t>(), j["dims"][1].get<std::size_t>());
      return detail::hopf_from_json(j, c, a, a.degrees.size(),
                                    [&](auto dom, auto cod, RationalMatrix m, const std::string& what) {
                                      try {
                                        return c.from_matrix(dom, cod, std::move(m));
                                      } catch (const ContractViolation& e) {
                                        throw LoadError("degree", what + " is not degree-preserving: " + e.what());
                                      }
                                    });
    }
    if (cat == "finset") {
      FinSet c;
      std::size_t n = detail::dim_from_json(j, "dim");
      return detail::hopf_from_json(j, c, FinSet::obj(n), n,
                                    [&](auto dom, auto cod, const RationalMatrix& m, const std::string& what) {
                                      return detail::finset_from_matrix(c, dom, cod, m, what);
                                    });
    }
    throw LoadError("parse", "unknown category \"" + cat + "\"");
  } catch (const json::exception& e) {
    throw LoadError("parse", e.what());
  }
}

/// Parses and checks the Hopf axioms; the first failing law is reported.
inline AnyHopf load_structure_constants_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LoadError("parse", e.what());
  }
  AnyHopf h = parse_structure_constants(j);
  std::visit(
      [](const auto& x) {
        LawReport r;
        try {
          r = check_hopf(x);
        } catch (const ContractViolation& e) {
          throw LoadError("parse", e.what());
        }
        for (const auto& law : r.laws())
          if (law.verdict != Verdict::pass) {
            std::optional<std::size_t> index = law.witness ? law.witness->index : std::nullopt;
            std::string msg = "axiom " + law.id + " fails";
            if (index) msg += " (witness index " + std::to_string(*index) + ")";
            throw LoadError("axiom", msg, law.id, index);
          }
      },
      h);
  return h;
}

inline AnyHopf load_structure_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("parse", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_structure_constants_from_string(buf.str());
}

/// Law report as JSON. Witness columns are nested string arrays (one row per
/// entry of the column).
inline json report_to_json(const LawReport& r) {
  json laws = json::array();
  for (const auto& law : r.laws()) {
    json j;
    j["id"] = law.id;
    j["verdict"] = to_string(law.verdict);
    j["instances"] = law.instances;
    j["detail"] = law.detail;
    if (law.witness) {
      const auto& w = *law.witness;
      json wj;
      wj["context"] = w.context;
      wj["index"] = w.index ? json(*w.index) : json(nullptr);
      auto column = [](const std::vector<std::string>& col) {
        json a = json::array();
        for (const auto& s : col) a.push_back(json::array({s}));
        return a;
      };
      wj["lhs"] = column(w.lhs);
      wj["rhs"] = column(w.rhs);
      wj["note"] = w.note;
      j["witness"] = wj;
    } else {
      j["witness"] = nullptr;
    }
    laws.push_back(j);
  }
  return laws;
}

}  // namespace catfrob

#endif  // CATFROB_JSON_IO_HPP
