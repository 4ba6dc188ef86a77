#ifndef CATFROB_GRVECT_HPP
#define CATFROB_GRVECT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matrix_category.hpp"

namespace catfrob {

/// A Z/2-graded space given by the degree (0 even, 1 odd) of each basis vector.
struct GrVectObj {
  std::vector<std::uint8_t> degrees;
  friend bool operator==(const GrVectObj&, const GrVectObj&) = default;

  std::size_t even() const {
    std::size_t n = 0;
    for (auto d : degrees) n += d == 0;
    return n;
  }
  std::size_t odd() const { return degrees.size() - even(); }
};

/// Finite-dimensional Z/2-graded rational vector spaces with degree-preserving
/// maps and the Koszul symmetry.
class GrVect : public MatrixCategoryBase<GrVect, GrVectObj> {
 public:
  static constexpr const char* kind = "grvect";

  /// (p|q): p even basis vectors followed by q odd ones.
  static Obj obj(std::size_t p, std::size_t q) {
    Obj x;
    x.degrees.assign(p, 0);
    x.degrees.insert(x.degrees.end(), q, 1);
    return x;
  }

  Obj unit() const { return obj(1, 0); }
  std::size_t size(const Obj& x) const { return x.degrees.size(); }
  bool same(const Obj& a, const Obj& b) const { return a == b; }

  Obj tensor(const Obj& a, const Obj& b) const {
    Obj out;
    out.degrees.reserve(a.degrees.size() * b.degrees.size());
    for (auto da : a.degrees)
      for (auto db : b.degrees) out.degrees.push_back(da ^ db);
    return out;
  }
  using MatrixCategoryBase::tensor;

  std::string describe(const Obj& x) const {
    std::string s = "(" + std::to_string(x.even()) + "|" + std::to_string(x.odd()) + ")";
    if (x == obj(x.even(), x.odd())) return s;
    s += "[";
    for (auto d : x.degrees) s += static_cast<char>('0' + d);
    return s + "]";
  }

  void validate(const Obj& dom, const Obj& cod, const RationalMatrix& m) const {
    if (m.rows() != size(cod) || m.cols() != size(dom))
      throw ContractViolation("GrVect: matrix " + m.shape() + " does not fit " + describe(dom) + " -> " +
                              describe(cod));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (const auto& e : m.row(i))
        if (cod.degrees[i] != dom.degrees[e.col])
          throw ContractViolation("GrVect: entry (" + std::to_string(i) + "," + std::to_string(e.col) +
                                  ") breaks the grading");
  }

  bool is_homogeneous(const Obj& dom, const Obj& cod, const RationalMatrix& m) const {
    try {
      validate(dom, cod, m);
      return true;
    } catch (const ContractViolation&) {
      return false;
    }
  }

  /// x⊗y → y⊗x, with sign -1 on pairs of odd basis vectors.
  Mor symmetry(const Obj& x, const Obj& y) const {
    std::size_t n = size(x), m = size(y);
    RationalMatrix s(n * m, n * m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < m; ++k)
        s.set(k * n + i, i * m + k, Rational((x.degrees[i] & y.degrees[k]) ? -1 : 1));
    return {tensor(x, y), tensor(y, x), std::move(s)};
  }

  /// Degreewise kernel of f - g: even kernel vectors first, then odd ones.
  std::pair<Obj, Mor> equalizer(const Mor& f, const Mor& g) const {
    require(same(f.dom, g.dom) && same(f.cod, g.cod), "equalizer: morphisms not parallel");
    RationalMatrix diff = f.matrix - g.matrix;
    std::vector<std::vector<Rational>> cols;
    Obj e;
    for (std::uint8_t deg : {std::uint8_t{0}, std::uint8_t{1}}) {
      std::vector<std::size_t> idx;
      for (std::size_t j = 0; j < size(f.dom); ++j)
        if (f.dom.degrees[j] == deg) idx.push_back(j);
      RationalMatrix block(diff.rows(), idx.size());
      for (std::size_t c = 0; c < idx.size(); ++c)
        for (std::size_t i = 0; i < diff.rows(); ++i) block.set(i, c, diff.at(i, idx[c]));
      RationalMatrix k = kernel_basis(block);
      for (std::size_t c = 0; c < k.cols(); ++c) {
        std::vector<Rational> v(size(f.dom));
        for (std::size_t r = 0; r < idx.size(); ++r) v[idx[r]] = k.at(r, c);
        cols.push_back(std::move(v));
        e.degrees.push_back(deg);
      }
    }
    RationalMatrix inc(size(f.dom), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t i = 0; i < cols[c].size(); ++i) inc.set(i, c, cols[c][i]);
    return {e, Mor{e, f.dom, std::move(inc)}};
  }

  /// Degree-preserving elementary matrices in row-major order.
  std::vector<Mor> hom_basis(const Obj& x, const Obj& y) const {
    std::vector<Mor> out;
    for (std::size_t i = 0; i < size(y); ++i)
      for (std::size_t j = 0; j < size(x); ++j) {
        if (y.degrees[i] != x.degrees[j]) continue;
        RationalMatrix m(size(y), size(x));
        m.set(i, j, Rational(1));
        out.push_back({x, y, std::move(m)});
      }
    return out;
  }
};

}  // namespace catfrob

#endif  // CATFROB_GRVECT_HPP
