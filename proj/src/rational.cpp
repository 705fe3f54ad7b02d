#include "rankone/rational.hpp"

#include "rankone/error.hpp"

namespace rankone {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  // Unicode minus sign (U+2212) as written in docs.
  const std::string unicode_minus = "\xE2\x88\x92";
  if (s.rfind(unicode_minus, 0) == 0) s = "-" + s.substr(unicode_minus.size());
  if (s.empty()) throw ParseError("empty rational literal");
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + std::string(text));
  if (v.get_den() == 0) throw ParseError("zero denominator: " + std::string(text));
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

std::optional<Rational> Rational::sqrt() const {
  if (sgn(v_) < 0) return std::nullopt;
  const mpz_class& num = v_.get_num();
  const mpz_class& den = v_.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

std::optional<Rational> Rational::inverse() const {
  if (is_zero()) return std::nullopt;
  return Rational(mpq_class(1 / v_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

}  // namespace rankone
