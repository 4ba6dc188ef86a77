#ifndef CATFROB_MATRIX_HPP
#define CATFROB_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace catfrob {

/// Exact rational matrix. Storage is row-wise sparse (zero entries are never
/// stored) but the interface is that of a dense rows x cols matrix. Tensor
/// products of identities dominate every computation here, which keeps the
/// fill low.
class RationalMatrix {
 public:
  struct Entry {
    std::size_t col;
    Rational value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Row = std::vector<Entry>;

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(std::make_shared<std::vector<Row>>(rows)) {}

  /// Dense construction from nested rows; every row must have the same length.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    mut().resize(rows_);
    std::size_t i = 0;
    for (const auto& row : rows) {
      require(row.size() == cols_, "RationalMatrix: ragged initializer");
      std::size_t j = 0;
      for (const auto& v : row) {
        if (!v.is_zero()) mut()[i].push_back({j, v});
        ++j;
      }
      ++i;
    }
  }

  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.mut()[i].push_back({i, Rational(1)});
    return m;
  }

  static RationalMatrix from_dense(std::size_t rows, std::size_t cols, const std::vector<Rational>& entries) {
    require(entries.size() == rows * cols, "RationalMatrix::from_dense: entry count mismatch");
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (!entries[i * cols + j].is_zero()) m.mut()[i].push_back({j, entries[i * cols + j]});
    return m;
  }

  /// Column vector.
  static RationalMatrix column(const std::vector<Rational>& entries) {
    return from_dense(entries.size(), 1, entries);
  }

  /// Matrix of the function table `table` viewed as a 0/1 matrix (column j has
  /// a single 1 in row table[j]).
  static RationalMatrix from_function(std::size_t cod, const std::vector<std::size_t>& table) {
    RationalMatrix m(cod, table.size());
    for (std::size_t j = 0; j < table.size(); ++j) {
      require(table[j] < cod, "RationalMatrix::from_function: value out of range");
      m.mut()[table[j]].push_back({j, Rational(1)});
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t i) const { return data_->at(i); }

  Rational at(std::size_t i, std::size_t j) const {
    require(i < rows_ && j < cols_, "RationalMatrix::at: index out of range");
    const Row& r = (*data_)[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) return it->value;
    return Rational(0);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : *data_) n += r.size();
    return n;
  }

  bool is_zero() const {
    return std::all_of(data_->begin(), data_->end(), [](const Row& r) { return r.empty(); });
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : (*data_)[i]) t.mut()[e.col].push_back({i, e.value});
    return t;
  }

  RationalMatrix scaled(const Rational& s) const {
    if (s.is_zero()) return zero(rows_, cols_);
    RationalMatrix m = *this;
    for (auto& r : m.mut())
      for (auto& e : r) e.value *= s;
    return m;
  }

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) { return combine(a, b, Rational(1)); }
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) { return combine(a, b, Rational(-1)); }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_)
      throw ContractViolation("RationalMatrix: cannot multiply " + a.shape() + " by " + b.shape());
    RationalMatrix c(a.rows_, b.cols_);
    std::vector<Rational> acc(b.cols_);
    std::vector<char> used(b.cols_, 0);
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      touched.clear();
      for (const auto& ea : (*a.data_)[i]) {
        for (const auto& eb : (*b.data_)[ea.col]) {
          if (!used[eb.col]) {
            used[eb.col] = 1;
            touched.push_back(eb.col);
            acc[eb.col].assign_product(ea.value, eb.value);
          } else {
            acc[eb.col].add_product(ea.value, eb.value);
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      Row& out = c.mut()[i];
      for (std::size_t col : touched) {
        if (!acc[col].is_zero()) out.push_back({col, acc[col]});
        used[col] = 0;
      }
    }
    return c;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && (a.data_ == b.data_ || *a.data_ == *b.data_);
  }

  /// First column (in order) on which the two same-shape matrices differ.
  std::optional<std::size_t> first_differing_column(const RationalMatrix& other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_, "first_differing_column: shape mismatch");
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Row& x = (*data_)[i];
      const Row& y = (*other.data_)[i];
      std::size_t p = 0, q = 0;
      while (p < x.size() || q < y.size()) {
        std::size_t c;
        if (q >= y.size() || (p < x.size() && x[p].col < y[q].col)) {
          c = x[p].col;
        } else if (p >= x.size() || y[q].col < x[p].col) {
          c = y[q].col;
        } else if (x[p].value == y[q].value) {
          ++p, ++q;
          continue;
        } else {
          c = x[p].col;
        }
        if (!best || c < *best) best = c;
        break;
      }
    }
    return best;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  /// Dense rendering with "p/q" strings.
  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_, "0/1"));
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : (*data_)[i]) out[i][e.col] = e.value.str();
    return out;
  }

  std::size_t hash() const {
    std::size_t h = rows_ * 1000003u ^ cols_;
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : (*data_)[i]) h = h * 31 + (i * 7919 + e.col) * 13 + e.value.hash();
    return h;
  }

  /// Mutable access used by builders; keeps rows sorted and zero-free.
  void set(std::size_t i, std::size_t j, const Rational& v) {
    require(i < rows_ && j < cols_, "RationalMatrix::set: index out of range");
    Row& r = mut()[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) {
      if (v.is_zero()) r.erase(it);
      else it->value = v;
    } else if (!v.is_zero()) {
      r.insert(it, Entry{j, v});
    }
  }

  /// Appends to row i; caller guarantees increasing column order and v != 0.
  void push_back_unchecked(std::size_t i, std::size_t j, Rational v) { mut()[i].push_back({j, std::move(v)}); }

 private:
  std::vector<Row>& mut() {
    if (data_.use_count() > 1) data_ = std::make_shared<std::vector<Row>>(*data_);
    return *data_;
  }

  static RationalMatrix combine(const RationalMatrix& a, const RationalMatrix& b, const Rational& sb) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw ContractViolation("RationalMatrix: cannot add " + a.shape() + " and " + b.shape());
    RationalMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      const Row& x = (*a.data_)[i];
      const Row& y = (*b.data_)[i];
      Row& out = c.mut()[i];
      std::size_t p = 0, q = 0;
      while (p < x.size() || q < y.size()) {
        if (q >= y.size() || (p < x.size() && x[p].col < y[q].col)) {
          out.push_back(x[p++]);
        } else if (p >= x.size() || y[q].col < x[p].col) {
          out.push_back({y[q].col, y[q].value * sb});
          ++q;
        } else {
          Rational v = x[p].value + y[q].value * sb;
          if (!v.is_zero()) out.push_back({x[p].col, v});
          ++p, ++q;
        }
      }
    }
    return c;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  // Shared between copies; mut() detaches before writing.
  std::shared_ptr<std::vector<Row>> data_ = std::make_shared<std::vector<Row>>();
};

inline std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << m.shape() << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
  }
  return os << "]";
}

/// Kronecker product with row-major index convention:
/// entry[(i*b.rows+k), (j*b.cols+l)] = a[i,j] * b[k,l].
inline RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.rows(); ++k) {
      std::size_t r = i * b.rows() + k;
      for (const auto& ea : a.row(i))
        for (const auto& eb : b.row(k)) {
          Rational v;
          v.assign_product(ea.value, eb.value);
          c.push_back_unchecked(r, ea.col * b.cols() + eb.col, std::move(v));
        }
    }
  return c;
}

}  // namespace catfrob

#endif  // CATFROB_MATRIX_HPP
