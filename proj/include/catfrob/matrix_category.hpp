#ifndef CATFROB_MATRIX_CATEGORY_HPP
#define CATFROB_MATRIX_CATEGORY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace catfrob {

template <class Obj>
struct MatrixMor {
  Obj dom;
  Obj cod;
  RationalMatrix matrix;
};

/// Morphism-level operations shared by the matrix-backed categories. Derived
/// supplies size(Obj), same(Obj, Obj), tensor(Obj, Obj), describe(Obj) and
/// validate(dom, cod, matrix).
template <class Derived, class ObjT>
class MatrixCategoryBase {
 public:
  using Obj = ObjT;
  using Mor = MatrixMor<ObjT>;

  Obj dom(const Mor& f) const { return f.dom; }
  Obj cod(const Mor& f) const { return f.cod; }

  Mor id(const Obj& x) const { return {x, x, RationalMatrix::identity(self().size(x))}; }

  Mor zero(const Obj& x, const Obj& y) const { return {x, y, RationalMatrix(self().size(y), self().size(x))}; }

  Mor from_matrix(const Obj& dom, const Obj& cod, RationalMatrix m) const {
    self().validate(dom, cod, m);
    return {dom, cod, std::move(m)};
  }

  const RationalMatrix& matrix(const Mor& f) const { return f.matrix; }

  Mor compose(const Mor& g, const Mor& f) const {
    if (!self().same(f.cod, g.dom))
      throw ContractViolation("compose: codomain " + self().describe(f.cod) + " does not match domain " +
                              self().describe(g.dom));
    return {f.dom, g.cod, g.matrix * f.matrix};
  }

  Mor tensor(const Mor& f, const Mor& g) const {
    return {self().tensor(f.dom, g.dom), self().tensor(f.cod, g.cod), kron(f.matrix, g.matrix)};
  }

  Mor add(const Mor& f, const Mor& g) const {
    require(self().same(f.dom, g.dom) && self().same(f.cod, g.cod), "add: morphisms not parallel");
    return {f.dom, f.cod, f.matrix + g.matrix};
  }

  Mor scale(const Rational& s, const Mor& f) const { return {f.dom, f.cod, f.matrix.scaled(s)}; }

  bool equal(const Mor& a, const Mor& b) const {
    return self().same(a.dom, b.dom) && self().same(a.cod, b.cod) && a.matrix == b.matrix;
  }

  std::optional<std::size_t> first_mismatch(const Mor& a, const Mor& b) const {
    return a.matrix.first_differing_column(b.matrix);
  }

  std::vector<std::string> render_column(const Mor& f, std::size_t j) const {
    std::vector<std::string> col;
    for (std::size_t i = 0; i < f.matrix.rows(); ++i) col.push_back(f.matrix.at(i, j).str());
    return col;
  }

  std::optional<Mor> inverse(const Mor& f) const {
    auto g = try_inverse(f.matrix);
    if (!g) return std::nullopt;
    return Mor{f.cod, f.dom, std::move(*g)};
  }

  bool is_mono(const Mor& f) const { return rank(f.matrix) == f.matrix.cols(); }

  /// The unique h with mono∘h = f, if it exists.
  std::optional<Mor> factor_through(const Mor& mono, const Mor& f) const {
    require(self().same(mono.cod, f.cod), "factor_through: codomains differ");
    require(is_mono(mono), "factor_through: first argument is not monic");
    auto h = solve_linear(mono.matrix, f.matrix);
    if (!h) return std::nullopt;
    return Mor{f.dom, mono.dom, std::move(*h)};
  }

 protected:
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

}  // namespace catfrob

#endif  // CATFROB_MATRIX_CATEGORY_HPP
