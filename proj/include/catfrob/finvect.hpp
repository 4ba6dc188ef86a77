#ifndef CATFROB_FINVECT_HPP
#define CATFROB_FINVECT_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "matrix_category.hpp"

namespace catfrob {

struct FinVectObj {
  std::size_t dim = 0;
  friend auto operator<=>(const FinVectObj&, const FinVectObj&) = default;
};

/// Finite-dimensional rational vector spaces with a chosen basis. The tensor
/// of dimensions m and n has basis (i, k) ↦ i·n + k.
class FinVect : public MatrixCategoryBase<FinVect, FinVectObj> {
 public:
  static constexpr const char* kind = "finvect";

  static Obj obj(std::size_t dim) { return {dim}; }

  Obj unit() const { return {1}; }
  std::size_t size(const Obj& x) const { return x.dim; }
  bool same(const Obj& a, const Obj& b) const { return a.dim == b.dim; }
  Obj tensor(const Obj& a, const Obj& b) const { return {a.dim * b.dim}; }
  using MatrixCategoryBase::tensor;
  std::string describe(const Obj& x) const { return std::to_string(x.dim); }

  void validate(const Obj& dom, const Obj& cod, const RationalMatrix& m) const {
    if (m.rows() != cod.dim || m.cols() != dom.dim)
      throw ContractViolation("FinVect: matrix " + m.shape() + " does not fit " + describe(dom) + " -> " +
                              describe(cod));
  }

  Mor symmetry(const Obj& x, const Obj& y) const {
    RationalMatrix m(x.dim * y.dim, x.dim * y.dim);
    for (std::size_t i = 0; i < x.dim; ++i)
      for (std::size_t k = 0; k < y.dim; ++k) m.set(k * x.dim + i, i * y.dim + k, Rational(1));
    return {tensor(x, y), tensor(y, x), std::move(m)};
  }

  std::pair<Obj, Mor> equalizer(const Mor& f, const Mor& g) const {
    require(same(f.dom, g.dom) && same(f.cod, g.cod), "equalizer: morphisms not parallel");
    RationalMatrix k = kernel_basis(f.matrix - g.matrix);
    Obj e{k.cols()};
    return {e, Mor{e, f.dom, std::move(k)}};
  }

  /// Elementary matrices E_ij in row-major order.
  std::vector<Mor> hom_basis(const Obj& x, const Obj& y) const {
    std::vector<Mor> out;
    for (std::size_t i = 0; i < y.dim; ++i)
      for (std::size_t j = 0; j < x.dim; ++j) {
        RationalMatrix m(y.dim, x.dim);
        m.set(i, j, Rational(1));
        out.push_back({x, y, std::move(m)});
      }
    return out;
  }
};

}  // namespace catfrob

#endif  // CATFROB_FINVECT_HPP
