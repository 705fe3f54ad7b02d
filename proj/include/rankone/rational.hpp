#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace rankone {

/// Exact rational number in canonical form (reduced, positive denominator).
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p/q" (an optional leading U+2212 minus is accepted too).
  static Rational parse(std::string_view text);
  static Rational from_int(long k) { return Rational(k); }

  const mpq_class& value() const { return v_; }
  std::string str() const;
  double to_double() const { return v_.get_d(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// Exact square root when both numerator and denominator are perfect squares.
  std::optional<Rational> sqrt() const;
  std::optional<Rational> inverse() const;

  // GMP arithmetic already returns canonical values
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Canonical{}, a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Canonical{}, a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Canonical{}, a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(Canonical{}, -v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  struct Canonical {};
  template <class Expr>
  Rational(Canonical, Expr&& e) : v_(std::forward<Expr>(e)) {}

  mpq_class v_{0};
};

}  // namespace rankone
