#ifndef CATFROB_LINALG_HPP
#define CATFROB_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace catfrob {

/// Reduced row echelon form of a matrix together with its pivot columns.
struct RowEchelon {
  std::vector<RationalMatrix::Row> rows;  // nonzero rows only, in pivot order
  std::vector<std::size_t> pivots;        // pivots[r] = leading column of rows[r]
  std::size_t cols = 0;
};

namespace detail {

// row_target -= factor * row_pivot, both sorted by column.
inline void axpy_row(RationalMatrix::Row& target, const Rational& factor, const RationalMatrix::Row& pivot) {
  RationalMatrix::Row out;
  out.reserve(target.size() + pivot.size());
  std::size_t p = 0, q = 0;
  while (p < target.size() || q < pivot.size()) {
    if (q >= pivot.size() || (p < target.size() && target[p].col < pivot[q].col)) {
      out.push_back(std::move(target[p++]));
    } else if (p >= target.size() || pivot[q].col < target[p].col) {
      out.push_back({pivot[q].col, -(factor * pivot[q].value)});
      ++q;
    } else {
      Rational v = target[p].value - factor * pivot[q].value;
      if (!v.is_zero()) out.push_back({target[p].col, std::move(v)});
      ++p, ++q;
    }
  }
  target = std::move(out);
}

inline const Rational* find_entry(const RationalMatrix::Row& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const RationalMatrix::Entry& e, std::size_t c) { return e.col < c; });
  if (it != row.end() && it->col == col) return &it->value;
  return nullptr;
}

}  // namespace detail

/// Gauss-Jordan elimination restricted to the first `pivot_limit` columns
/// (columns beyond it are carried along, as for augmented systems).
inline RowEchelon row_echelon(const RationalMatrix& m, std::size_t pivot_limit) {
  std::vector<RationalMatrix::Row> work;
  work.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.row(i).empty()) work.push_back(m.row(i));

  RowEchelon out;
  out.cols = m.cols();
  std::size_t next = 0;  // rows [0, next) are pivot rows
  for (std::size_t c = 0; c < pivot_limit && next < work.size(); ++c) {
    // rows below `next` have leading column >= c; pick the sparsest with a hit at c
    std::size_t best = work.size();
    for (std::size_t r = next; r < work.size(); ++r) {
      if (!work[r].empty() && work[r].front().col == c) {
        if (best == work.size() || work[r].size() < work[best].size()) best = r;
      }
    }
    if (best == work.size()) continue;
    std::swap(work[next], work[best]);
    RationalMatrix::Row& piv = work[next];
    Rational inv = Rational(1) / piv.front().value;
    for (auto& e : piv) e.value *= inv;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == next) continue;
      const Rational* hit = detail::find_entry(work[r], c);
      if (hit) {
        Rational factor = *hit;
        detail::axpy_row(work[r], factor, piv);
      }
    }
    out.pivots.push_back(c);
    ++next;
  }
  // rows past `next` have no pivot inside pivot_limit; keep the nonzero ones
  std::size_t keep = next;
  for (std::size_t r = next; r < work.size(); ++r)
    if (!work[r].empty()) {
      if (keep != r) work[keep] = std::move(work[r]);
      ++keep;
    }
  work.resize(keep);
  out.rows = std::move(work);
  return out;
}

inline std::size_t rank(const RationalMatrix& m) { return row_echelon(m, m.cols()).pivots.size(); }

/// Canonical kernel basis: one column per free variable (in increasing
/// order), with that free variable set to 1 and the other free variables 0.
inline RationalMatrix kernel_basis(const RationalMatrix& f) {
  RowEchelon e = row_echelon(f, f.cols());
  std::vector<char> is_pivot(f.cols(), 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < f.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RationalMatrix basis(f.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis.set(fc, k, Rational(1));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const Rational* v = detail::find_entry(e.rows[r], fc);
      if (v) basis.set(e.pivots[r], k, -*v);
    }
  }
  return basis;
}

/// Solves a*x = b (b may have several columns). Free variables are set to 0.
inline std::optional<RationalMatrix> solve_linear(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows())
    throw ContractViolation("solve_linear: row mismatch " + a.shape() + " vs " + b.shape());
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (const auto& e : a.row(i)) aug.push_back_unchecked(i, e.col, e.value);
    for (const auto& e : b.row(i)) aug.push_back_unchecked(i, n + e.col, e.value);
  }
  RowEchelon e = row_echelon(aug, n);
  // a row whose pivot part vanished but whose right-hand side did not
  for (std::size_t r = e.pivots.size(); r < e.rows.size(); ++r)
    if (!e.rows[r].empty()) return std::nullopt;
  RationalMatrix x(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    for (const auto& entry : e.rows[r])
      if (entry.col >= n) x.set(e.pivots[r], entry.col - n, entry.value);
  }
  return x;
}

inline std::optional<RationalMatrix> try_inverse(const RationalMatrix& f) {
  if (f.rows() != f.cols()) return std::nullopt;
  // a square f with f*x = I solvable is surjective, hence invertible
  return solve_linear(f, RationalMatrix::identity(f.rows()));
}

}  // namespace catfrob

#endif  // CATFROB_LINALG_HPP
