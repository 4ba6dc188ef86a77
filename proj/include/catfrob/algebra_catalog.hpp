#ifndef CATFROB_ALGEBRA_CATALOG_HPP
#define CATFROB_ALGEBRA_CATALOG_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "algebra_objects.hpp"
#include "finset.hpp"
#include "finvect.hpp"
#include "grvect.hpp"

namespace catfrob {

using Column = std::vector<std::pair<std::size_t, Rational>>;

/// Matrix whose j-th column is column(j).
inline RationalMatrix matrix_by_columns(std::size_t rows, std::size_t cols,
                                        const std::function<Column(std::size_t)>& column) {
  RationalMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, v] : column(j)) m.set(i, j, m.at(i, j) + v);
  return m;
}

/// k[Z/n] with basis g^0, ..., g^{n-1}.
inline HopfAlgebraData<FinVect> group_algebra(std::size_t n) {
  require(n >= 1, "group_algebra: order must be at least 1");
  FinVect c;
  auto a = FinVect::obj(n);
  auto aa = c.tensor(a, a);
  auto one = c.unit();
  HopfAlgebraData<FinVect> h{"k[Z" + std::to_string(n) + "]", c, a, {}, {}, {}, {}, {}};
  h.m = c.from_matrix(aa, a, matrix_by_columns(n, n * n, [n](std::size_t j) {
    return Column{{(j / n + j % n) % n, Rational(1)}};
  }));
  h.u = c.from_matrix(one, a, matrix_by_columns(n, 1, [](std::size_t) { return Column{{0, Rational(1)}}; }));
  h.d = c.from_matrix(a, aa, matrix_by_columns(n * n, n, [n](std::size_t j) { return Column{{j * n + j, Rational(1)}}; }));
  h.e = c.from_matrix(a, one, matrix_by_columns(1, n, [](std::size_t) { return Column{{0, Rational(1)}}; }));
  h.s = c.from_matrix(a, a, matrix_by_columns(n, n, [n](std::size_t j) { return Column{{(n - j) % n, Rational(1)}}; }));
  return h;
}

/// Z/n as a Hopf monoid in FinSet: diagonal, terminal map and inversion.
inline HopfAlgebraData<FinSet> cyclic_group_set(std::size_t n) {
  require(n >= 1, "cyclic_group_set: order must be at least 1");
  FinSet c;
  auto g = FinSet::obj(n);
  HopfAlgebraData<FinSet> h{"Z" + std::to_string(n), c, g, {}, {}, {}, {}, {}};
  std::vector<std::size_t> m(n * n), d(n), e(n, 0), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = (i + j) % n;
    d[i] = i * n + i;
    s[i] = (n - i) % n;
  }
  h.m = c.make(c.tensor(g, g), g, m);
  h.u = c.make(c.unit(), g, {0});
  h.d = c.make(g, c.tensor(g, g), d);
  h.e = c.make(g, c.unit(), e);
  h.s = c.make(g, g, s);
  return h;
}

/// Sweedler's four-dimensional Hopf algebra, basis 1, g, x, gx (g² = 1,
/// x² = 0, xg = -gx; g group-like, Δx = x⊗1 + g⊗x).
inline HopfAlgebraData<FinVect> sweedler_algebra() {
  FinVect c;
  auto a = FinVect::obj(4);
  auto aa = c.tensor(a, a);
  auto one = c.unit();
  // basis index of g^p x^q is p + 2q
  auto idx = [](std::size_t p, std::size_t q) { return p + 2 * q; };
  HopfAlgebraData<FinVect> h{"Sweedler", c, a, {}, {}, {}, {}, {}};
  h.m = c.from_matrix(aa, a, matrix_by_columns(4, 16, [&](std::size_t j) {
    std::size_t l = j / 4, r = j % 4;
    std::size_t a1 = l % 2, b1 = l / 2, c1 = r % 2, d1 = r / 2;
    if (b1 + d1 >= 2) return Column{};
    // x^b g^c = (-1)^{bc} g^c x^b
    Rational sign((b1 * c1) % 2 ? -1 : 1);
    return Column{{idx((a1 + c1) % 2, b1 + d1), sign}};
  }));
  h.u = c.from_matrix(one, a, matrix_by_columns(4, 1, [](std::size_t) { return Column{{0, Rational(1)}}; }));
  auto t = [](std::size_t i, std::size_t j) { return i * 4 + j; };
  h.d = c.from_matrix(a, aa, matrix_by_columns(16, 4, [&](std::size_t j) {
    switch (j) {
      case 0: return Column{{t(0, 0), Rational(1)}};
      case 1: return Column{{t(1, 1), Rational(1)}};
      case 2: return Column{{t(2, 0), Rational(1)}, {t(1, 2), Rational(1)}};
      default: return Column{{t(3, 1), Rational(1)}, {t(0, 3), Rational(1)}};
    }
  }));
  h.e = c.from_matrix(a, one, RationalMatrix{{1, 1, 0, 0}});
  h.s = c.from_matrix(a, a, matrix_by_columns(4, 4, [](std::size_t j) {
    switch (j) {
      case 0: return Column{{0, Rational(1)}};
      case 1: return Column{{1, Rational(1)}};
      case 2: return Column{{3, Rational(-1)}};
      default: return Column{{2, Rational(1)}};
    }
  }));
  return h;
}

/// k[x]/(x²) in GrVect with 1 even and x odd; 1 group-like, x primitive.
inline HopfAlgebraData<GrVect> graded_nilpotent_algebra() {
  GrVect c;
  auto a = GrVect::obj(1, 1);
  auto aa = c.tensor(a, a);
  HopfAlgebraData<GrVect> h{"graded k[x]/(x^2)", c, a, {}, {}, {}, {}, {}};
  // A⊗A basis: 1⊗1, 1⊗x, x⊗1, x⊗x
  h.m = c.from_matrix(aa, a, RationalMatrix{{1, 0, 0, 0}, {0, 1, 1, 0}});
  h.u = c.from_matrix(c.unit(), a, RationalMatrix{{1}, {0}});
  h.d = c.from_matrix(a, aa, RationalMatrix{{1, 0}, {0, 1}, {0, 1}, {0, 0}});
  h.e = c.from_matrix(a, c.unit(), RationalMatrix{{1, 0}});
  h.s = c.from_matrix(a, a, RationalMatrix{{1, 0}, {0, -1}});
  return h;
}

/// Ungraded k[x]/(x²) with polynomial multiplication and the comultiplication
/// d(1) = 1⊗x + x⊗1, d(x) = x⊗x, e(1) = 0, e(x) = 1.
inline FrobeniusData<FinVect> nilpotent_frobenius() {
  FinVect c;
  auto a = FinVect::obj(2);
  auto aa = c.tensor(a, a);
  FrobeniusData<FinVect> f{a, {}, {}, {}, {}};
  f.m = c.from_matrix(aa, a, RationalMatrix{{1, 0, 0, 0}, {0, 1, 1, 0}});
  f.u = c.from_matrix(c.unit(), a, RationalMatrix{{1}, {0}});
  f.d = c.from_matrix(a, aa, RationalMatrix{{0, 0}, {1, 0}, {1, 0}, {0, 1}});
  f.e = c.from_matrix(a, c.unit(), RationalMatrix{{0, 1}});
  return f;
}

}  // namespace catfrob

#endif  // CATFROB_ALGEBRA_CATALOG_HPP
