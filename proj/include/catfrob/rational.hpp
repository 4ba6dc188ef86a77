#ifndef CATFROB_RATIONAL_HPP
#define CATFROB_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "error.hpp"

namespace catfrob {

/// Exact rational number backed by GMP. Always canonical: lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator) {
    require(denominator != 0, "Rational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text) {
    std::string s(text);
    require(!s.empty(), "Rational::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ContractViolation("Rational::parse: malformed '" + s + "'");
    require(q.get_den() != 0, "Rational::parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

  /// Always "p/q", including integers ("3/1").
  std::string str() const { return value_.get_num().get_str() + "/" + value_.get_den().get_str(); }

  /// "p" for integers, "p/q" otherwise; used for human-facing output.
  std::string pretty() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return str();
  }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  /// *this = a·b, with a fast path for integers.
  void assign_product(const Rational& a, const Rational& b) {
    if (a.is_integer() && b.is_integer()) {
      mpz_mul(mpq_numref(value_.get_mpq_t()), mpq_numref(a.value_.get_mpq_t()), mpq_numref(b.value_.get_mpq_t()));
      mpz_set_ui(mpq_denref(value_.get_mpq_t()), 1);
    } else {
      mpq_mul(value_.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    }
  }

  /// *this += a·b without temporaries when all three are integers.
  void add_product(const Rational& a, const Rational& b) {
    if (is_integer() && a.is_integer() && b.is_integer()) {
      mpz_addmul(mpq_numref(value_.get_mpq_t()), mpq_numref(a.value_.get_mpq_t()), mpq_numref(b.value_.get_mpq_t()));
      return;
    }
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), t.get_mpq_t());
  }

  bool is_integer() const { return mpz_cmp_ui(mpq_denref(value_.get_mpq_t()), 1) == 0; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    require(!o.is_zero(), "Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const {
    std::size_t h = std::hash<long>{}(mpz_get_si(value_.get_num_mpz_t()));
    h ^= std::hash<long>{}(mpz_get_si(value_.get_den_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.pretty(); }

 private:
  mpq_class value_{0};
};

}  // namespace catfrob

template <>
struct std::hash<catfrob::Rational> {
  std::size_t operator()(const catfrob::Rational& r) const noexcept { return r.hash(); }
};

#endif  // CATFROB_RATIONAL_HPP
