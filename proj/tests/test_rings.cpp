#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankone/rings.hpp"

using namespace rankone;

namespace {

GaussianQ gq(long re, long im) { return GaussianQ(Rational(re), Rational(im)); }

template <StarRing T>
void check_involution_laws(std::uint64_t seed, int trials) {
  Rng rng(seed);
  for (int k = 0; k < trials; ++k) {
    const T a = ring_traits<T>::random(rng, 3);
    const T b = ring_traits<T>::random(rng, 3);
    const T c = ring_traits<T>::random(rng, 3);
    CHECK(involve(a * b) == involve(b) * involve(a));
    CHECK(involve(a + b) == involve(a) + involve(b));
    CHECK(involve(involve(a)) == a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("\xE2\x88\x92" "3/2") == Rational(-3, 2));
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK(Rational(9, 4).sqrt() == Rational(3, 2));
  CHECK_FALSE(Rational(2).sqrt().has_value());
  CHECK_FALSE(Rational(-4).sqrt().has_value());
}

TEST_CASE("involve examples") {
  CHECK(involve(gq(2, 3)) == gq(2, -3));
  const BicomplexQ w(gq(1, 1), gq(2, 0));
  CHECK(involve(w) == BicomplexQ(gq(1, -1), gq(2, 0)));
  const SplitComplexQ s(Rational(3), Rational(2));
  CHECK(involve(s) == SplitComplexQ(Rational(3), Rational(-2)));
}

TEST_CASE("involution is additive, product-reversing and self-inverse") {
  check_involution_laws<Rational>(1, 50);
  check_involution_laws<GaussianQ>(2, 50);
  check_involution_laws<BicomplexQ>(3, 50);
  check_involution_laws<SplitComplexQ>(4, 50);
  check_involution_laws<Dual<GaussianQ>>(5, 50);
  check_involution_laws<TwistedBicomplex<GaussianQ>>(6, 50);
  check_involution_laws<QuaternionQ>(7, 50);
  check_involution_laws<ModInt<6>>(8, 50);
  check_involution_laws<ModInt<5>>(9, 50);
}

TEST_CASE("machine complex laws hold to rounding") {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const auto a = ring_traits<MachineComplex>::random(rng, 1);
    const auto b = ring_traits<MachineComplex>::random(rng, 1);
    CHECK(magnitude(involve(a * b) - involve(b) * involve(a)) < 1e-15);
    CHECK(involve(involve(a)) == a);
  }
}

TEST_CASE("skew norm") {
  CHECK(skew_norm(QuaternionQ::from_int(1)) == GaussianQ::from_int(1));
  // (3 - 4x)(3 + 4x) = 9 + 12x - 12x - 16x^2 = 9 + 16 with x^2 = -1
  using RealQuat = SkewQuotient<Rational, 1>;
  const RealQuat w(Rational(3), Rational(4));
  CHECK(skew_norm(w) == Rational(25));
  CHECK(involve(w) * w == RealQuat(Rational(25)));

  Rng rng(12);
  for (int k = 0; k < 50; ++k) {
    const auto a = ring_traits<QuaternionQ>::random(rng, 3);
    const auto b = ring_traits<QuaternionQ>::random(rng, 3);
    CHECK(skew_norm(a * b) == skew_norm(a) * skew_norm(b));
    CHECK(involve(a) * a == QuaternionQ(skew_norm(a)));
  }
}

TEST_CASE("skew quotient conjugates scalars through x") {
  Rng rng(13);
  const auto x = QuaternionQ::x();
  CHECK(x * x == QuaternionQ::from_int(-1));
  for (int k = 0; k < 50; ++k) {
    const auto s = ring_traits<GaussianQ>::random(rng, 3);
    CHECK(x * QuaternionQ(s) == QuaternionQ(involve(s)) * x);
  }
  CHECK_FALSE(ring_traits<QuaternionQ>::commutative);
  const QuaternionQ i(gq(0, 1));
  CHECK_FALSE(i * x == x * i);
}

TEST_CASE("quaternion inverse") {
  Rng rng(14);
  for (int k = 0; k < 30; ++k) {
    const auto a = ring_traits<QuaternionQ>::random(rng, 3);
    if (is_zero(a)) continue;
    const auto inv = try_inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == QuaternionQ::from_int(1));
    CHECK(*inv * a == QuaternionQ::from_int(1));
  }
}

TEST_CASE("dual numbers") {
  using D = Dual<GaussianQ>;
  const D one = dual_extend_lift(GaussianQ::from_int(1), GaussianQ::from_int(0));
  CHECK(one * one == D::from_int(1));
  const D eps = dual_extend_lift(GaussianQ::from_int(0), GaussianQ::from_int(1));
  CHECK(is_zero(eps * eps));
  const D z = dual_extend_lift(gq(0, 1), gq(1, 0));
  CHECK(z * z == D(gq(-1, 0), gq(0, 2)));
  CHECK(involve(z) == D(gq(0, -1), gq(1, 0)));

  // dropping eps is a ring map commuting with the involution
  Rng rng(15);
  for (int k = 0; k < 50; ++k) {
    const auto a = ring_traits<D>::random(rng, 3);
    const auto b = ring_traits<D>::random(rng, 3);
    CHECK(dual_base(a * b) == dual_base(a) * dual_base(b));
    CHECK(dual_base(a + b) == dual_base(a) + dual_base(b));
    CHECK(dual_base(involve(a)) == involve(dual_base(a)));
  }
}

TEST_CASE("half and imaginary units") {
  CHECK(Rational(2) * *half<Rational>() == Rational(1));
  CHECK(GaussianQ::from_int(2) * *half<GaussianQ>() == GaussianQ::from_int(1));
  CHECK(ModInt<5>::from_int(2) * *half<ModInt<5>>() == ModInt<5>::from_int(1));
  CHECK_FALSE(has_half<ModInt<2>>());
  CHECK_FALSE(has_half<ModInt<6>>());

  const auto i = *ring_traits<GaussianQ>::imaginary_unit();
  CHECK(i * i == GaussianQ::from_int(-1));
  CHECK(involve(i) == -i);
  const auto ib = *ring_traits<BicomplexQ>::imaginary_unit();
  CHECK(ib * ib == BicomplexQ::from_int(-1));
  CHECK(involve(ib) == -ib);
  const auto im = *ring_traits<MachineComplex>::imaginary_unit();
  CHECK(im * im == MachineComplex(-1.0));
  CHECK_FALSE(ring_traits<SplitComplexQ>::imaginary_unit().has_value());
  CHECK_FALSE(ring_traits<Rational>::imaginary_unit().has_value());
}

TEST_CASE("modular inverses") {
  CHECK(try_inverse(ModInt<6>::from_int(5)) == ModInt<6>::from_int(5));
  CHECK_FALSE(try_inverse(ModInt<6>::from_int(3)).has_value());
  for (long k = 1; k < 7; ++k) {
    const auto x = ModInt<7>::from_int(k);
    CHECK(x * *try_inverse(x) == ModInt<7>::from_int(1));
  }
  CHECK(ModInt<5>::from_int(-1).value() == 4);
}

TEST_CASE("self-adjoint square roots") {
  CHECK(self_adjoint_sqrt(gq(4, 0)) == gq(2, 0));
  CHECK_FALSE(self_adjoint_sqrt(gq(2, 0)).has_value());
  CHECK_FALSE(self_adjoint_sqrt(gq(4, 1)).has_value());

  // bicomplex: (r0 + j r1)^2 with r0, r1 rational
  Rng rng(16);
  for (int k = 0; k < 30; ++k) {
    const BicomplexQ r(gq(k % 5 + 1, 0), gq(k % 7 - 3, 0));
    const auto s = self_adjoint_sqrt(r * r);
    REQUIRE(s);
    CHECK(*s * *s == r * r);
    CHECK(involve(*s) == *s);
  }
  const BicomplexQ minus_one = BicomplexQ::from_int(-1);
  const auto j = self_adjoint_sqrt(minus_one);
  REQUIRE(j);
  CHECK(*j * *j == minus_one);

  const auto d = self_adjoint_sqrt(Dual<Rational>(Rational(4), Rational(1)));
  REQUIRE(d);
  CHECK(*d * *d == Dual<Rational>(Rational(4), Rational(1)));

  CHECK(self_adjoint_sqrt(ModInt<5>::from_int(4)).has_value());
  CHECK_FALSE(self_adjoint_sqrt(ModInt<5>::from_int(2)).has_value());
  CHECK(magnitude(*self_adjoint_sqrt(MachineComplex(2.0)) - MachineComplex(std::sqrt(2.0))) == 0.0);
}

TEST_CASE("magnitude is zero only at zero") {
  CHECK(magnitude(Rational(0)) == 0.0);
  CHECK(magnitude(Rational::parse("1/1000000000000000000000000000000000000000000000000000000000000000000000"
                                  "0000000000000000000000000000000000000000000000000000000000000000000000"
                                  "0000000000000000000000000000000000000000000000000000000000000000000000"
                                  "0000000000000000000000000000000000000000000000000000000000000000000000"
                                  "000000000000000000000000000000000000000000000000000000000000")) > 0.0);
}
