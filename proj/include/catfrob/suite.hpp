#ifndef CATFROB_SUITE_HPP
#define CATFROB_SUITE_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "algebra_catalog.hpp"
#include "json_io.hpp"
#include "lindist.hpp"
#include "probes.hpp"
#include "set_comonad.hpp"

namespace catfrob {

/// Unknown example or suite, or a suite the example does not support.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expected suite outcome: every law passes (measured laws count as passing),
/// or the named law is refuted.
struct Expectation {
  enum class Kind { pass, refuted } kind = Kind::pass;
  std::string law;

  static Expectation passes() { return {}; }
  static Expectation refutes(std::string law) { return {Kind::refuted, std::move(law)}; }
  std::string str() const { return kind == Kind::pass ? "pass" : "refuted(" + law + ")"; }
};

using ExampleData =
    std::variant<HopfAlgebraData<FinVect>, HopfAlgebraData<GrVect>, HopfAlgebraData<FinSet>, FrobeniusData<FinVect>>;

struct ExampleDescriptor {
  std::string name;
  std::string category;
  std::string generator;
  std::string description;
  std::function<ExampleData()> make;
  std::vector<std::pair<std::string, Expectation>> expected;  // per supported suite, in listing order
  std::vector<std::pair<std::string, RationalMatrix>> characters;  // extra one-dimensional modules for hopf-lemma
  bool has_expectations = true;  // false for examples loaded from a file

  std::vector<std::string> suites() const {
    std::vector<std::string> out;
    for (const auto& [s, e] : expected) out.push_back(s);
    return out;
  }
  const Expectation* expectation(const std::string& suite) const {
    for (const auto& [s, e] : expected)
      if (s == suite) return &e;
    return nullptr;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hopf-axioms",        "monad-laws", "hopf-monad",
                                              "hopf-lemma",         "frobenius-pipeline", "lindist",
                                              "right-variant",      "bihopf",     "frobenius-monoid"};
  return names;
}

namespace detail {

inline std::vector<std::pair<std::string, Expectation>> all_pass_for(const std::vector<std::string>& suites) {
  std::vector<std::pair<std::string, Expectation>> out;
  for (const auto& s : suites) out.emplace_back(s, Expectation::passes());
  return out;
}

inline std::vector<std::string> suites_for(const std::string& category) {
  if (category == "finvect") return suite_names();
  if (category == "grvect") return {"hopf-axioms", "monad-laws", "hopf-monad", "hopf-lemma", "frobenius-pipeline",
                                    "frobenius-monoid"};
  if (category == "finset") return {"hopf-axioms", "monad-laws", "hopf-monad", "bihopf"};
  return {};
}

}  // namespace detail

/// Shipped examples in listing order.
inline const std::vector<ExampleDescriptor>& example_registry() {
  static const std::vector<ExampleDescriptor> registry = [] {
    std::vector<ExampleDescriptor> r;
    auto linear = detail::all_pass_for(detail::suites_for("finvect"));
    r.push_back({"trivial", "finvect", "group_algebra(1)", "the one-dimensional Hopf algebra k",
                 [] { return ExampleData(group_algebra(1)); }, linear, {}, true});
    r.push_back({"kz2", "finvect", "group_algebra(2)", "group algebra of Z/2, basis e_0, e_1",
                 [] { return ExampleData(group_algebra(2)); }, linear, {{"sign", RationalMatrix{{1, -1}}}}, true});
    r.push_back({"kz3", "finvect", "group_algebra(3)", "group algebra of Z/3, basis e_0, e_1, e_2",
                 [] { return ExampleData(group_algebra(3)); }, linear, {}, true});
    r.push_back({"sweedler", "finvect", "sweedler_algebra()", "Sweedler's Hopf algebra, basis 1, g, x, gx",
                 [] { return ExampleData(sweedler_algebra()); }, linear,
                 {{"sign", RationalMatrix{{1, -1, 0, 0}}}}, true});
    auto graded = detail::all_pass_for(detail::suites_for("grvect"));
    for (auto& [s, e] : graded) {
      if (s == "frobenius-pipeline") e = Expectation::refutes(kPipelineStages[0]);
      if (s == "frobenius-monoid") e = Expectation::refutes("frobenius_monoid.search");
    }
    r.push_back({"graded-nilpotent", "grvect", "graded_nilpotent_algebra()",
                 "k[x]/(x^2) with x odd, basis 1, x", [] { return ExampleData(graded_nilpotent_algebra()); }, graded,
                 {}, true});
    auto set = detail::all_pass_for(detail::suites_for("finset"));
    set.back().second = Expectation::refutes("bihopf.comonad_cofusion");
    r.push_back({"finset-z2", "finset", "cyclic_group_set(2)", "Z/2 as a Hopf monoid in finite sets",
                 [] { return ExampleData(cyclic_group_set(2)); }, set, {}, true});
    r.push_back({"nilpotent-frobenius", "finvect", "nilpotent_frobenius()",
                 "ungraded k[x]/(x^2) with its Frobenius comonoid, basis 1, x",
                 [] { return ExampleData(nilpotent_frobenius()); },
                 detail::all_pass_for({"lindist", "frobenius-monoid"}), {}, true});
    return r;
  }();
  return registry;
}

inline const ExampleDescriptor* find_example(const std::string& name) {
  for (const auto& e : example_registry())
    if (e.name == name) return &e;
  return nullptr;
}

/// An ad hoc example from a structure-constant file. It has no recorded
/// expectations, so every suite run on it counts as matched.
inline ExampleDescriptor example_from_file(const std::string& path) {
  AnyHopf h = load_structure_constants(path);
  ExampleDescriptor d;
  d.generator = path;
  d.has_expectations = false;
  std::visit(
      [&](const auto& x) {
        d.name = x.name;
        d.category = std::decay_t<decltype(x.cat)>::kind;
        d.make = [x] { return ExampleData(x); };
      },
      h);
  d.description = "loaded from " + path;
  d.expected = detail::all_pass_for(detail::suites_for(d.category));
  return d;
}

struct SuiteReport {
  std::string example;
  std::string suite;
  std::string category;
  std::uint64_t seed = 0;
  std::size_t probe_budget = 0;
  std::vector<std::string> probes;
  LawReport laws;
  std::optional<Expectation> expected;
  bool matched = true;
  double wall_seconds = 0;  // not serialized
};

/// "pass", or "<verdict>(<id>)" for the first law that does not pass.
inline std::string outcome(const LawReport& r) {
  for (const auto& law : r.laws())
    if (law.verdict != Verdict::pass && law.verdict != Verdict::measured)
      return std::string(to_string(law.verdict)) + "(" + law.id + ")";
  return "pass";
}

inline bool matches(const LawReport& r, const Expectation& e) {
  if (e.kind == Expectation::Kind::pass) return !r.empty() && r.all_pass();
  const auto* law = r.find(e.law);
  return law && (law->verdict == Verdict::refuted || law->verdict == Verdict::fail);
}

namespace detail {

inline void record_probe(LawReport& r, const std::string& id, const ProbeVerdict& v, const std::string& what) {
  r.set(id, v.holds ? Verdict::pass : Verdict::refuted,
        v.holds ? what + " on " + std::to_string(v.checked) + " probes" : "fails at " + v.witness);
  r.entry(id).instances = v.checked;
}

template <LinearCategory C>
std::shared_ptr<const FreeForgetful<C>> free_forgetful(const HopfAlgebraData<C>& h) {
  return std::make_shared<const FreeForgetful<C>>(std::make_shared<TensorMonad<C>>(h));
}

template <LinearCategory C>
std::optional<WirthmullerInput<C>> unit_input(LawReport& r, const std::shared_ptr<const FreeForgetful<C>>& adj,
                                              const std::string& id) {
  auto res = frobenius_structure_search(adj->cat_d(), unit_comonoid(*adj));
  if (res.outcome != SearchOutcome::found) {
    r.set(id, res.outcome == SearchOutcome::refuted ? Verdict::refuted : Verdict::undecided,
          "no Frobenius structure on T1 in the category of T-algebras: " + res.detail);
    return std::nullopt;
  }
  r.set(id, Verdict::pass, "Frobenius structure found, dim Hom(1, T1) = " + std::to_string(res.unit_space_dim));
  return WirthmullerInput<C>{adj, adj->cat_c().unit(), res.u->underlying, res.m->underlying, true};
}

template <class C>
LawReport hopf_suite(const std::string& suite, const ExampleDescriptor& ex, const HopfAlgebraData<C>& h,
                     std::uint64_t seed, const std::vector<typename C::Obj>& xs) {
  const C& c = h.cat;
  LawReport r;
  if (suite == "hopf-axioms") return check_hopf(h);
  auto t = std::make_shared<TensorMonad<C>>(h);
  if (suite == "monad-laws") return check_monad_laws(*t, xs, probe_morphisms(c, xs, seed));
  if (suite == "hopf-monad") {
    record_probe(r, "hopf_monad.left", is_left_hopf(*t, xs), "left fusion invertible");
    record_probe(r, "hopf_monad.right", is_right_hopf(*t, xs), "right fusion invertible");
    if constexpr (LinearCategory<C>) record_probe(r, "hopf_monad.descent", descent_type_check(*t, xs), "descent");
    return r;
  }
  if constexpr (std::is_same_v<C, FinSet>) {
    if (suite == "bihopf") {
      record_probe(r, "bihopf.monad_left_hopf", is_left_hopf(*t, xs), "left fusion invertible");
      record_probe(r, "bihopf.monad_right_hopf", is_right_hopf(*t, xs), "right fusion invertible");
      SetHomComonad g(h.carrier.size);
      r.merge(check_comonad_laws(g, xs), "bihopf.");
      auto two = FinSet::obj(2);
      auto v = check_cofusion_left(g, two, two);
      std::string ctx = c.describe(two) + "," + c.describe(two);
      std::string sizes = "cardinality " + std::to_string(v.dom_size) + " vs " + std::to_string(v.cod_size);
      if (v.outcome == CofusionOutcome::bijective) r.set("bihopf.comonad_cofusion", Verdict::pass, sizes);
      else if (v.outcome == CofusionOutcome::refuted)
        r.set("bihopf.comonad_cofusion", Verdict::refuted, v.witness,
              Witness{ctx, std::nullopt, {}, {}, v.injective ? "injective, not surjective" : "not injective"});
      else r.set("bihopf.comonad_cofusion", Verdict::undecided, v.witness);
      return r;
    }
  }
  if constexpr (LinearCategory<C>) {
    auto adj = free_forgetful(h);
    auto as = algebra_probes(*adj, xs);
    if (suite == "hopf-lemma") {
      r.merge(check_adjunction(*adj, xs, as));
      if constexpr (std::is_same_v<C, FinVect>)
        for (const auto& [label, chi] : ex.characters) as.push_back(character_algebra(*adj, chi, label));
      r.merge(check_hopf_lemma(*adj, xs, as, probe_morphisms(c, xs, seed)));
      return r;
    }
    if (suite == "frobenius-pipeline") return ambidextrous_frobenius<C>(adj, xs, as).report;
    if (suite == "frobenius-monoid") {
      auto res = frobenius_structure_search(c, h.comonoid());
      r.set("frobenius_monoid.search",
            res.outcome == SearchOutcome::found     ? Verdict::pass
            : res.outcome == SearchOutcome::refuted ? Verdict::refuted
                                                    : Verdict::undecided,
            res.outcome == SearchOutcome::found
                ? "found, dim Hom(1, A) = " + std::to_string(res.unit_space_dim)
                : "no Frobenius structure extending the comonoid: " + res.detail);
      if (res.outcome == SearchOutcome::found)
        r.merge(check_frobenius_monoid(c, FrobeniusData<C>{h.carrier, *res.m, *res.u, h.d, h.e}));
      if constexpr (std::is_same_v<C, GrVect>)
        r.merge(check_frobenius_monoid(FinVect{}, nilpotent_frobenius()), "ungraded.");
      return r;
    }
    if (suite == "lindist" || suite == "right-variant" || suite == "bihopf") {
      auto w = unit_input(r, adj, "frobenius_input");
      if (!w) return r;
      try {
        auto left = right_adjoint_construct(*w, xs);
        if (suite == "lindist") {
          auto b = bihopf_triple(left);
          auto f = strengths_from_bihopf(b, xs);
          r.merge(check_lf_axioms(c, adj->cat_d(), f, xs));
          r.merge(check_lindist_unit_objects(c, adj->cat_d(), f));
          r.merge(check_lindist_adjunction(b, f, xs, as));
          r.merge(hopf_inverses_from_lindist(b, f, xs, as));
        } else if (suite == "right-variant") {
          auto right = right_adjoint_right_variant(*w, xs);
          r.merge(check_right_adjoint(right, xs, as), "right_variant.");
          r.merge(check_lax_structure(right, xs), "right_variant.");
          r.merge(cohopf_identity(right, xs, as), "right_variant.");
          r.merge(compare_right_adjoints(left, right, xs).report);
        } else {
          record_probe(r, "bihopf.monad_left_hopf", is_left_hopf(*t, xs), "left fusion invertible");
          record_probe(r, "bihopf.monad_right_hopf", is_right_hopf(*t, xs), "right fusion invertible");
          r.merge(cohopf_identity(left, xs, as), "bihopf.");
        }
      } catch (const ConstructionError& e) {
        r.set(suite + ".construction", Verdict::fail, e.what());
      }
      return r;
    }
  }
  throw UsageError("suite " + suite + " is not available for example " + ex.name);
}

inline LawReport frobenius_suite(const std::string& suite, const ExampleDescriptor& ex, const FrobeniusData<FinVect>& a,
                                 const std::vector<FinVect::Obj>& xs) {
  FinVect c;
  if (suite == "frobenius-monoid") return check_frobenius_monoid(c, a);
  if (suite == "lindist") {
    LawReport r;
    auto f = tensor_functor(c, a);
    r.merge(check_frobenius_monoidal_functor(c, c, f, xs));
    auto l = degenerate_lindist(f);
    r.merge(check_lf_axioms(c, c, l, xs));
    r.merge(check_lindist_unit_objects(c, c, l));
    return r;
  }
  throw UsageError("suite " + suite + " is not available for example " + ex.name);
}

}  // namespace detail

/// Runs one suite on one example. Every law of the suite is evaluated; a
/// construction that cannot proceed is reported as a failing law.
inline SuiteReport run_suite(const ExampleDescriptor& ex, const std::string& suite, std::uint64_t seed,
                             std::size_t probe_budget) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw UsageError("unknown suite " + suite);
  const Expectation* expected = ex.expectation(suite);
  if (!expected) throw UsageError("suite " + suite + " is not available for example " + ex.name);
  auto start = std::chrono::steady_clock::now();
  SuiteReport out;
  out.example = ex.name;
  out.suite = suite;
  out.category = ex.category;
  out.seed = seed;
  out.probe_budget = probe_budget;
  ExampleData data = ex.make();
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FrobeniusData<FinVect>>) {
          FinVect c;
          auto xs = probe_objects(c, seed, probe_budget);
          for (const auto& o : xs) out.probes.push_back(c.describe(o));
          out.laws = detail::frobenius_suite(suite, ex, x, xs);
        } else {
          auto xs = probe_objects(x.cat, seed, probe_budget);
          for (const auto& o : xs) out.probes.push_back(x.cat.describe(o));
          out.laws = detail::hopf_suite(suite, ex, x, seed, xs);
        }
      },
      data);
  if (ex.has_expectations) {
    out.expected = *expected;
    out.matched = matches(out.laws, *expected);
  }
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

inline SuiteReport run_suite(const std::string& example, const std::string& suite, std::uint64_t seed,
                             std::size_t probe_budget) {
  const auto* ex = find_example(example);
  if (!ex) throw UsageError("unknown example " + example);
  return run_suite(*ex, suite, seed, probe_budget);
}

inline json report_json(const SuiteReport& r) {
  json j;
  j["example"] = r.example;
  j["suite"] = r.suite;
  j["category"] = r.category;
  j["seed"] = r.seed;
  j["probe_budget"] = r.probe_budget;
  j["probes"] = r.probes;
  j["laws"] = report_to_json(r.laws);
  j["outcome"] = r.laws.empty() ? std::string("empty") : outcome(r.laws);
  j["expected"] = r.expected ? json(r.expected->str()) : json(nullptr);
  j["matched"] = r.matched;
  return j;
}

/// Reports of one invocation, serialized with sorted keys and a trailing newline.
inline std::string reports_text(const std::vector<SuiteReport>& rs) {
  json j;
  j["reports"] = json::array();
  bool matched = true;
  for (const auto& r : rs) {
    j["reports"].push_back(report_json(r));
    matched = matched && r.matched;
  }
  j["matched"] = matched;
  return compact_dump(j);
}

/// One line per example: name, category, generator and expected outcomes.
inline std::vector<std::string> list_examples() {
  std::vector<std::string> out;
  for (const auto& e : example_registry()) {
    std::string line = e.name + "\t" + e.category + "\t" + e.generator + "\t";
    for (std::size_t i = 0; i < e.expected.size(); ++i)
      line += (i ? "," : "") + e.expected[i].first + "=" + e.expected[i].second.str();
    out.push_back(line);
  }
  return out;
}

}  // namespace catfrob

#endif  // CATFROB_SUITE_HPP
