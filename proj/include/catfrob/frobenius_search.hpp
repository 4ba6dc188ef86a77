#ifndef CATFROB_FROBENIUS_SEARCH_HPP
#define CATFROB_FROBENIUS_SEARCH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algebra_objects.hpp"
#include "linalg.hpp"

namespace catfrob {

enum class SearchOutcome { found, refuted, undecided };

inline const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::refuted: return "refuted";
    case SearchOutcome::undecided: return "undecided";
  }
  return "?";
}

template <class K>
struct FrobeniusSearchResult {
  SearchOutcome outcome = SearchOutcome::undecided;
  std::optional<typename K::Mor> u;
  std::optional<typename K::Mor> m;
  std::size_t unit_space_dim = 0;  // dim Hom(𝟙, A) in the searched category
  std::string detail;
};

struct FrobeniusSearchOptions {
  std::size_t max_carrier_dim = 6;
  std::size_t max_grid_points = 4096;
};

namespace detail {

// Writes the entries of m (row-major) into column `col` of sys starting at row `offset`.
inline void put_flat(RationalMatrix& sys, std::size_t offset, std::size_t col, const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& e : m.row(i)) sys.set(offset + i * m.cols() + e.col, col, e.value);
}

/// Evaluation solving both snake identities against coev, if one exists.
template <LinearCategory K>
std::optional<typename K::Mor> solve_evaluation(const K& k, const typename K::Obj& a, const typename K::Mor& coev) {
  auto one = k.id(a);
  auto aa = k.tensor(a, a);
  auto basis = k.hom_basis(aa, k.unit());
  std::size_t n = k.matrix(one).rows();
  RationalMatrix sys(2 * n * n, basis.size());
  RationalMatrix rhs(2 * n * n, 1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    put_flat(sys, 0, i, k.matrix(k.compose(k.tensor(basis[i], one), k.tensor(one, coev))));
    put_flat(sys, n * n, i, k.matrix(k.compose(k.tensor(one, basis[i]), k.tensor(coev, one))));
  }
  put_flat(rhs, 0, 0, k.matrix(one));
  put_flat(rhs, n * n, 0, k.matrix(one));
  auto x = solve_linear(sys, rhs);
  if (!x) return std::nullopt;
  RationalMatrix ev(1, n * n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!x->at(i, 0).is_zero()) ev = ev + k.matrix(basis[i]).scaled(x->at(i, 0));
  return k.from_matrix(aa, k.unit(), ev);
}

// coev : 𝟙 → A⊗A reshaped into an n×n matrix.
inline RationalMatrix reshape_square(const RationalMatrix& column, std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < column.rows(); ++i)
    for (const auto& e : column.row(i)) m.set(i / n, i % n, e.value);
  return m;
}

}  // namespace detail

/// For a fixed unit u, the only candidate multiplication is
/// m = (ev⊗1)∘(1⊗d) with ev dual to coev = d∘u; returns it when all laws pass.
template <LinearCategory K>
std::optional<FrobeniusData<K>> frobenius_candidate(const K& k, const ComonoidData<K>& c, const typename K::Mor& u) {
  auto coev = k.compose(c.d, u);
  auto ev = detail::solve_evaluation(k, c.carrier, coev);
  if (!ev) return std::nullopt;
  auto m = k.compose(k.tensor(*ev, k.id(c.carrier)), k.tensor(k.id(c.carrier), c.d));
  FrobeniusData<K> f{c.carrier, m, u, c.d, c.e};
  if (!check_frobenius_monoid(k, f).all_pass()) return std::nullopt;
  return f;
}

/// Decides whether the comonoid extends to a Frobenius monoid inside K.
/// Solutions are closed under (u, m) ↦ (t·u, m/t), so a one-dimensional unit
/// space is decided exactly at a single representative. Larger unit spaces are
/// explored on a rational grid; they are refuted only when the coevaluation
/// d∘u is singular on the whole grid, which (the grid being wider than the
/// degree of det(d∘u)) forces det(d∘u) ≡ 0.
template <LinearCategory K>
FrobeniusSearchResult<K> frobenius_structure_search(const K& k, const ComonoidData<K>& c,
                                                    const FrobeniusSearchOptions& opt = {}) {
  FrobeniusSearchResult<K> res;
  const std::size_t n = k.matrix(k.id(c.carrier)).rows();
  if (n > opt.max_carrier_dim) {
    res.detail = "carrier dimension " + std::to_string(n) + " exceeds the search budget";
    return res;
  }
  auto basis = k.hom_basis(k.unit(), c.carrier);
  res.unit_space_dim = basis.size();

  auto accept = [&](const FrobeniusData<K>& f, const std::string& why) {
    res.outcome = SearchOutcome::found;
    res.u = f.u;
    res.m = f.m;
    res.detail = why;
  };

  if (basis.empty()) {
    auto u = k.from_matrix(k.unit(), c.carrier, RationalMatrix(n, 1));
    if (auto f = frobenius_candidate(k, c, u)) {
      accept(*f, "zero carrier");
    } else {
      res.outcome = SearchOutcome::refuted;
      res.detail = "no nonzero unit candidates: Hom(1, A) = 0";
    }
    return res;
  }

  if (basis.size() == 1) {
    auto u = basis[0];
    Rational s = k.matrix(k.compose(c.e, u)).at(0, 0);
    if (!s.is_zero()) u = k.from_matrix(k.unit(), c.carrier, k.matrix(u).scaled(Rational(1) / s));
    if (auto f = frobenius_candidate(k, c, u)) {
      accept(*f, "unique unit line");
    } else {
      res.outcome = SearchOutcome::refuted;
      res.detail = "the unique unit line admits no Frobenius structure";
    }
    return res;
  }

  // grid S = {0, 1, -1, 2, -2, ...} with |S| = n + 1
  std::vector<Rational> grid;
  for (long v = 0; grid.size() < n + 1; ++v) {
    if (v == 0) {
      grid.push_back(Rational(0));
      continue;
    }
    grid.push_back(Rational(v));
    if (grid.size() < n + 1) grid.push_back(Rational(-v));
  }
  std::size_t points = 1;
  for (std::size_t i = 0; i < basis.size() && points <= opt.max_grid_points; ++i) points *= grid.size();
  if (points > opt.max_grid_points) {
    res.detail = "unit space of dimension " + std::to_string(basis.size()) + " exceeds the grid budget";
    return res;
  }
  bool any_regular = false;
  std::vector<std::size_t> digits(basis.size(), 0);
  for (std::size_t p = 0; p < points; ++p) {
    for (std::size_t i = 0, q = p; i < basis.size(); ++i, q /= grid.size()) digits[i] = q % grid.size();
    RationalMatrix um(n, 1);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!grid[digits[i]].is_zero()) um = um + k.matrix(basis[i]).scaled(grid[digits[i]]);
    auto u = k.from_matrix(k.unit(), c.carrier, um);
    auto coev = k.matrix(k.compose(c.d, u));
    if (rank(detail::reshape_square(coev, n)) < n) continue;
    any_regular = true;
    if (auto f = frobenius_candidate(k, c, u)) {
      accept(*f, "grid point " + std::to_string(p));
      return res;
    }
  }
  if (!any_regular) {
    res.outcome = SearchOutcome::refuted;
    res.detail = "coevaluation d∘u is degenerate for every unit candidate";
  } else {
    res.detail = "nondegenerate units exist but none on the grid yields a Frobenius structure";
  }
  return res;
}

}  // namespace catfrob

#endif  // CATFROB_FROBENIUS_SEARCH_HPP
