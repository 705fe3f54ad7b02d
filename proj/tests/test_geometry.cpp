#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankone/geometry.hpp"

using namespace rankone;

namespace {

using MG = Matrix<GaussianQ>;

GaussianQ gq(long re, long im) { return GaussianQ(Rational(re), Rational(im)); }

template <StarRing T>
Matrix<T> e(std::size_t n, std::size_t i, std::size_t j) {
  return Matrix<T>::unit(n, i, j);
}

template <StarRing T>
void check_L_properties(std::uint64_t seed, int trials) {
  Rng rng(seed);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int t = 0; t < trials; ++t) {
      const auto q = sample_projection<T>(rng, n);
      const auto a = sample_tangent(rng, q);
      const auto b = sample_tangent(rng, q);
      const auto s = ring_traits<T>::random(rng, 3);
      CHECK(is_zero(main_identity_residual(q, a)));
      CHECK(is_tangent(q, L(q, a)));
      CHECK(L(q, s * a) == involve(s) * L(q, a));
      CHECK(L_unchecked(q, a) == L_general(q, a));
      // h = Omega(., L .) and hermitian symmetry
      CHECK(h(q, a, b) == omega(q, a, L(q, b)));
      CHECK(h(q, b, a) == involve(h(q, a, b)));
      CHECK(is_zero(omega(q, a, a)));
      CHECK(omega(q, a, b) == -omega(q, b, a));
      CHECK(is_zero(antisymplectic_residual(q, a, b)));
      CHECK(is_tangent(dagger(q), dagger(a)));
    }
  }
}

template <StarRing T>
void check_cover_properties(std::uint64_t seed, std::size_t n, int trials) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto c = sample_cover_point<T>(rng, n);
    CHECK(is_cover_point(c));
    const auto a = sample_tangent(rng, c.q);
    const auto b = sample_tangent(rng, c.q);
    const auto s = ring_traits<T>::random(rng, 3);

    const T lift = cover_tangent_lift(c, a);
    CHECK(involve(lift) == lift);
    CHECK(is_zero(dual_cover_residual(c, a, lift)));
    // the eps-coefficient is affine in s'; solve it independently
    const T e0 = dual_cover_residual(c, a, T::from_int(0)).b();
    const T e1 = dual_cover_residual(c, a, T::from_int(1)).b();
    const auto slope_inv = try_inverse(e1 - e0);
    REQUIRE(slope_inv);
    CHECK(-(e0 * *slope_inv) == lift);

    const auto ia = Istruct(c, a);
    CHECK(is_tangent(c.q, ia));
    CHECK(Istruct(c, ia) == -a);
    CHECK(Istruct(c, s * a) == involve(s) * ia);
    CHECK(h_tilde(c, a, b) == omega(c.q, a, Istruct(c, b)));
    CHECK(h_tilde(c, b, a) == involve(h_tilde(c, a, b)));
    CHECK(potential(c) * c.r == T::from_int(1));
  }
}

}  // namespace

TEST_CASE("L examples") {
  const auto q = Matrix<GaussianQ>::diagonal({gq(1, 0), gq(0, 0)});
  CHECK(L(q, e<GaussianQ>(2, 0, 1)) == gq(2, 0) * e<GaussianQ>(2, 1, 0));
  CHECK(L(q, e<GaussianQ>(2, 1, 0)) == gq(-2, 0) * e<GaussianQ>(2, 0, 1));
  CHECK(L(q, L(q, e<GaussianQ>(2, 0, 1))) == gq(-4, 0) * e<GaussianQ>(2, 0, 1));
  const auto a = commutator(q, MG{{gq(1, 2), gq(3, -1)}, {gq(0, 1), gq(2, 2)}});
  const auto i = gq(0, 1);
  CHECK(is_zero(L(q, i * a) + i * L(q, a)));
  CHECK_THROWS_AS(L(q, e<GaussianQ>(2, 0, 0)), NotTangent);
}

TEST_CASE("omega and h examples") {
  const auto q = Matrix<GaussianQ>::diagonal({gq(1, 0), gq(0, 0)});
  const auto e12 = e<GaussianQ>(2, 0, 1), e21 = e<GaussianQ>(2, 1, 0);
  CHECK(omega(q, e12, e21) == gq(1, 0));
  CHECK(is_zero(omega(q, e12, e12)));
  CHECK(h(q, e12, e12) == gq(2, 0));
  CHECK(is_zero(h(q, e12, e21)));
}

TEST_CASE("closedness of Omega") {
  Rng rng(1);
  for (std::size_t n : {2u, 3u}) {
    for (int t = 0; t < 50; ++t) {
      const auto q = sample_projection<GaussianQ>(rng, n);
      const auto a = sample_tangent(rng, q), b = sample_tangent(rng, q), c = sample_tangent(rng, q);
      CHECK(is_zero(closedness_residual(a, b, c)));
    }
  }
}

TEST_CASE("main identity, compatibility and antisymplectic property") {
  check_L_properties<GaussianQ>(2, 15);
  check_L_properties<BicomplexQ>(3, 15);
  check_L_properties<SplitComplexQ>(4, 15);
}

TEST_CASE("quaternionic main identity") {
  Rng rng(5);
  for (std::size_t n : {2u, 3u}) {
    for (int t = 0; t < 20; ++t) {
      const auto q = sample_projection<QuaternionQ>(rng, n);
      CHECK(q * q == q);
      const auto a = sample_tangent(rng, q);
      CHECK(is_tangent(q, L(q, a)));
      CHECK(is_zero(main_identity_residual(q, a)));
      // Tr(q^dagger q) is real
      const auto t2 = trace_norm(q);
      CHECK(involve(t2) == t2);
    }
  }
}

TEST_CASE("cover lift examples") {
  const auto q = Matrix<Rational>::diagonal({1, 0});
  const auto c = cover_lift(q);
  CHECK(c.r == Rational(1));
  CHECK(cover_lift(q, -1).r == Rational(-1));
  CHECK_THROWS_AS(cover_lift(Matrix<Rational>{{1, 1}, {0, 0}}), NoSquareRoot);
  const Matrix<MachineComplex> qm{{1.0, 1.0}, {0.0, 0.0}};
  const auto cm = cover_lift(qm);
  CHECK(cm.r.re() == doctest::Approx(0.7071067811865476).epsilon(1e-15));
  CHECK(potential(cm).re() == doctest::Approx(1.4142135623730951).epsilon(1e-15));
  CHECK(potential(cover_lift(qm, -1)).re() == doctest::Approx(-1.4142135623730951).epsilon(1e-15));
  CHECK(potential(c) == Rational(1));
}

TEST_CASE("cover tangent lift examples") {
  const auto c = cover_lift(Matrix<GaussianQ>::diagonal({gq(1, 0), gq(0, 0)}));
  CHECK(is_zero(cover_tangent_lift(c, e<GaussianQ>(2, 0, 1))));
  CHECK(is_zero(cover_tangent_lift(c, MG(2))));
  CHECK_THROWS_AS(cover_tangent_lift(cover_lift(Matrix<ModInt<2>>::diagonal({ModInt<2>::from_int(1),
                                                                              ModInt<2>::from_int(0)})),
                                     Matrix<ModInt<2>>(2)),
                  RingRefused);
}

TEST_CASE("I and h~ examples") {
  const auto c = cover_lift(Matrix<GaussianQ>::diagonal({gq(1, 0), gq(0, 0)}));
  const auto e12 = e<GaussianQ>(2, 0, 1), e21 = e<GaussianQ>(2, 1, 0);
  CHECK(Istruct(c, e12) == e21);
  CHECK(Istruct(c, e21) == -e12);
  CHECK(Istruct(c, Istruct(c, e12)) == -e12);
  const auto i = gq(0, 1);
  CHECK(is_zero(Istruct(c, i * e12) + i * Istruct(c, e12)));
  CHECK(is_zero(Istruct(c, MG(2))));
  CHECK(h_tilde(c, e12, e12) == gq(1, 0));
  CHECK(is_zero(h_tilde(c, e12, e21)));
}

TEST_CASE("cover structure over exact rings") {
  for (std::size_t n : {2u, 3u}) {
    check_cover_properties<GaussianQ>(10 + n, n, 15);
    check_cover_properties<SplitComplexQ>(20 + n, n, 15);
    check_cover_properties<ModInt<7>>(30 + n, n, 15);
  }
}

TEST_CASE("tangent lift is the only solution over F_p") {
  Rng rng(40);
  using T = ModInt<7>;
  for (int t = 0; t < 20; ++t) {
    const auto c = sample_cover_point<T>(rng, 3);
    const auto a = sample_tangent(rng, c.q);
    int solutions = 0;
    for (long s = 0; s < 7; ++s)
      if (is_zero(dual_cover_residual(c, a, T::from_int(s)))) {
        ++solutions;
        CHECK(T::from_int(s) == cover_tangent_lift(c, a));
      }
    CHECK(solutions == 1);
  }
}

TEST_CASE("root involution maps") {
  Rng rng(50);
  for (std::size_t n : {2u, 3u}) {
    for (int t = 0; t < 15; ++t) {
      const auto c = sample_cover_point<GaussianQ>(rng, n);
      const auto once = internal_i_map(c);
      const auto twice = internal_i_map(once);
      CHECK(twice.q == dagger(c.q));
      CHECK(twice.r == c.r);
      CHECK(is_cover_point(once));
      CHECK(is_projection(once.q));

      const auto phi = bicomplex_map(c);
      CHECK(is_cover_point(phi));
      CHECK(is_projection(phi.q));
      // self-adjoint for the bicomplex involution (a + jb)^* = a^* + j b^*
      const auto untwisted = phi.q.map([](const auto& x) { return retwist(x); });
      CHECK(dagger(untwisted) == untwisted);
      using B = TwistedBicomplex<GaussianQ>;
      CHECK(rootinv_map(B::generator(), phi).q == to_twisted_bicomplex(dagger(c.q)));
      const auto phi3 = rootinv_map(B::generator(), rootinv_map(B::generator(), phi));
      CHECK(phi3.q == dagger(phi.q));

      const auto a = sample_tangent(rng, c.q);
      CHECK(is_zero(internal_i_intertwining_residual(c, a)));
      CHECK(is_zero(bicomplex_intertwining_residual(c, a)));
      // the r-component follows: the lift of j dPhi(a) at Phi(c) is s(I a)
      const auto jd = B::generator() * bicomplex_derivative(c, a);
      CHECK(cover_tangent_lift(phi, jd) == B(cover_tangent_lift(c, Istruct(c, a))));
    }
  }
}

TEST_CASE("self-adjoint points are fixed by the root involution maps") {
  const auto c = cover_lift(Matrix<GaussianQ>::diagonal({gq(1, 0), gq(0, 0)}));
  CHECK(internal_i_map(c).q == c.q);
  CHECK(bicomplex_map(c).q == to_twisted_bicomplex(c.q));
  CHECK(is_zero(internal_i_intertwining_residual(c, e<GaussianQ>(2, 0, 1))));
  CHECK_THROWS_AS(internal_i_map(cover_lift(Matrix<Rational>::diagonal({1, 0}))), RingRefused);
}

TEST_CASE("antisymplectic examples") {
  const auto q = Matrix<GaussianQ>::diagonal({gq(1, 0), gq(0, 0)});
  const auto e12 = e<GaussianQ>(2, 0, 1), e21 = e<GaussianQ>(2, 1, 0);
  CHECK(is_zero(antisymplectic_residual(q, e12, e21)));
  CHECK(is_zero(antisymplectic_residual(q, e12, e12)));
}

TEST_CASE("polarizations") {
  const auto c0 = cover_lift(Matrix<GaussianQ>::diagonal({gq(1, 0), gq(0, 0)}));
  const auto p0 = polarization_split(c0);
  CHECK(p0.plus == c0.q);
  CHECK(p0.minus == c0.q);

  const auto cm = cover_lift(Matrix<MachineComplex>{{1.0, 1.0}, {0.0, 0.0}});
  const auto pm = polarization_split(cm);
  const Matrix<MachineComplex> plus{{1.0, 0.0}, {0.0, 0.0}};
  const Matrix<MachineComplex> minus{{0.5, 0.5}, {0.5, 0.5}};
  CHECK(max_magnitude(pm.plus - plus) < 1e-12);
  CHECK(max_magnitude(pm.minus - minus) < 1e-12);

  Rng rng(60);
  for (std::size_t n : {2u, 3u}) {
    for (int t = 0; t < 15; ++t) {
      const auto c = sample_cover_point<GaussianQ>(rng, n);
      const auto p = polarization_split(c);
      CHECK(p.plus * p.plus == p.plus);
      CHECK(p.minus * p.minus == p.minus);
      CHECK(dagger(p.plus) == p.plus);
      CHECK(dagger(p.minus) == p.minus);
      const auto a = sample_tangent(rng, c.q), b = sample_tangent(rng, c.q);
      CHECK(c.q * a + a * c.q == a);
      CHECK(is_zero(omega(c.q, c.q * a, c.q * b)));
      CHECK(is_zero(omega(c.q, a * c.q, b * c.q)));
      CHECK(is_zero(polarity_square_residual(c.q, a)));
    }
  }
}

TEST_CASE("quaternionic relations at machine points") {
  Rng rng(70);
  const MachineComplex i(0.0, 1.0);
  for (std::size_t n : {2u, 3u}) {
    for (int t = 0; t < 20; ++t) {
      const auto c = cover_lift(sample_projection<MachineComplex>(rng, n));
      const auto a = sample_tangent(rng, c.q);
      const auto I = [&](const Matrix<MachineComplex>& x) { return Istruct(c, x, 1e-9); };
      const auto iI = [&](const Matrix<MachineComplex>& x) { return i * I(x); };
      CHECK(max_magnitude(I(I(a)) + a) < 1e-12);
      CHECK(max_magnitude(iI(iI(a)) + a) < 1e-12);
      CHECK(max_magnitude(I(i * a) + i * I(a)) < 1e-12);
      CHECK(h_tilde(c, a, a).re() > 0.0);
      CHECK(std::fabs(h_tilde(c, a, a).im()) < 1e-12);
    }
  }
}

TEST_CASE("quaternion I squares to -1") {
  Rng rng(80);
  for (int t = 0; t < 20; ++t) {
    const auto q = sample_projection<MachineQuaternion>(rng, 2);
    const double tn = real_part(trace_norm(q));
    const CoverPoint<MachineQuaternion> c{q, MachineQuaternion(MachineComplex(1.0 / std::sqrt(tn)))};
    const auto a = sample_tangent(rng, q);
    CHECK(max_magnitude(Istruct(c, Istruct(c, a, 1e-9), 1e-9) + a) < 1e-12);
  }
}

TEST_CASE("Gram matrix of h~ is nonsingular") {
  Rng rng(90);
  for (std::size_t n : {2u, 3u}) {
    for (int t = 0; t < 10; ++t) {
      const auto c = sample_cover_point<GaussianQ>(rng, n);
      const auto basis = tangent_basis(c.q);
      REQUIRE(basis.size() == 2 * (n - 1));
      Matrix<GaussianQ> gram(basis.size());
      for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t l = 0; l < basis.size(); ++l) gram(k, l) = h_tilde(c, basis[k], basis[l]);
      CHECK_FALSE(is_zero(determinant(gram)));
    }
  }
}
