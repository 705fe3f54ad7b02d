#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankone/embedding.hpp"
#include "rankone/geometry.hpp"

using namespace rankone;

namespace {

using MC = Matrix<MachineComplex>;
using Q = MachineQuaternion;

HVec real_vec(std::initializer_list<double> xs) {
  HVec v;
  for (double x : xs) v.push_back(Q(MachineComplex(x)));
  return v;
}

HVec scaled_point(Rng& rng, HilbertKind kind, std::size_t dim) { return sample_hilbert_point(rng, kind, dim); }

}  // namespace

TEST_CASE("ambient metric examples") {
  CHECK(ambient_g(real_vec({4}), real_vec({1}), real_vec({1})) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(ambient_g(real_vec({1, 0}), real_vec({0, 1}), real_vec({0, 1})) == doctest::Approx(2.0).epsilon(1e-15));
  const HVec x = real_vec({3, 0, 4});
  const HVec v = real_vec({0, 1, 0});
  CHECK(ambient_g(x, v, v) == doctest::Approx(2.0 / 5.0).epsilon(1e-15));
  CHECK_THROWS_AS(ambient_g(real_vec({0, 0}), v, v), DomainError);
}

TEST_CASE("ambient metric is symmetric and positive") {
  Rng rng(1);
  for (auto kind : {HilbertKind::Real, HilbertKind::Complex, HilbertKind::Quaternionic}) {
    for (int t = 0; t < 30; ++t) {
      const auto x = random_hilbert_vector(rng, kind, 3);
      const auto v = random_hilbert_vector(rng, kind, 3);
      const auto w = random_hilbert_vector(rng, kind, 3);
      CHECK(ambient_g(x, v, w) == doctest::Approx(ambient_g(x, w, v)).epsilon(1e-12));
      CHECK(ambient_g(x, v, v) > 0.0);
    }
  }
}

TEST_CASE("embed_hilbert examples") {
  const auto e = embed_hilbert(real_vec({4}));
  CHECK(e.s == doctest::Approx(2.0));
  CHECK(e.u[0].a().re() == doctest::Approx(2.0));
  CHECK(e.P(0, 0).a().re() == doctest::Approx(2.0));

  const auto f = embed_hilbert(real_vec({1, 0}));
  CHECK(f.s == 1.0);
  CHECK(f.u[0].a().re() == 1.0);
  CHECK(is_zero(f.u[1]));
  CHECK(f.P(0, 0).a().re() == 1.0);
  CHECK(is_zero(f.P(0, 1)));
  CHECK(is_zero(f.P(1, 1)));

  Rng rng(2);
  const auto x = random_hilbert_vector(rng, HilbertKind::Quaternionic, 3);
  const auto a = embed_hilbert(x), b = embed_hilbert(4.0 * x);
  CHECK(b.s == doctest::Approx(2.0 * a.s).epsilon(1e-14));
  CHECK(max_magnitude(b.u - 2.0 * a.u) < 1e-14);
  CHECK(max_magnitude(b.P - a.P * Q(MachineComplex(2.0))) < 1e-14);
  CHECK_THROWS_AS(embed_hilbert(real_vec({0})), DomainError);
}

TEST_CASE("pullback residual examples") {
  CHECK(pullback_residual(real_vec({4}), real_vec({1}), real_vec({1})) < 1e-7);
  CHECK(pullback_residual(real_vec({1, 0}), real_vec({0, 1}), real_vec({0, 1})) < 1e-7);
  const HVec one{Q(MachineComplex(1.0))};
  const HVec j{Q::x()};
  CHECK(ambient_g(one, j, j) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pullback_residual(one, j, j) < 1e-7);
}

TEST_CASE("pullback matches the ambient metric on every space") {
  Rng rng(3);
  for (auto kind : {HilbertKind::Real, HilbertKind::Complex, HilbertKind::Quaternionic, HilbertKind::MatrixComplex}) {
    for (std::size_t dim : {1u, 2u, 3u}) {
      for (int t = 0; t < 10; ++t) {
        const auto x = scaled_point(rng, kind, dim);
        const auto v = random_hilbert_vector(rng, kind, dim);
        const auto w = random_hilbert_vector(rng, kind, dim);
        CHECK(pullback_residual(x, v, w) < 1e-6);
      }
    }
  }
}

TEST_CASE("wrong weights are detected") {
  Rng rng(4);
  const auto x = scaled_point(rng, HilbertKind::Complex, 3);
  const auto v = random_hilbert_vector(rng, HilbertKind::Complex, 3);
  EmbeddingWeights w;
  w.s = 2.0;
  CHECK(pullback_residual(x, v, v, {}, w) > 1e-3);
}

TEST_CASE("finite differences converge at second order") {
  Rng rng(5);
  for (int t = 0; t < 5; ++t) {
    const auto x = scaled_point(rng, HilbertKind::Complex, 2);
    const auto v = random_hilbert_vector(rng, HilbertKind::Complex, 2);
    FdOptions coarse, fine;
    coarse.step = 2e-2;
    fine.step = 1e-2;
    const double r1 = pullback_residual(x, v, v, coarse);
    const double r2 = pullback_residual(x, v, v, fine);
    const double ratio = r1 / r2;
    CHECK(ratio > 2.0);
    CHECK(ratio < 8.0);
    FdOptions rich = coarse;
    rich.richardson = true;
    CHECK(pullback_residual(x, v, v, rich) < r2);
  }
}

TEST_CASE("embedding is equivariant under unitaries") {
  Rng rng(6);
  for (std::size_t k : {2u, 3u, 4u}) {
    for (int t = 0; t < 20; ++t) {
      const auto U = random_unitary(rng, k);
      CHECK(max_magnitude(dagger(U) * U - MC::identity(k)) < 1e-12);
      const auto x = random_hilbert_vector(rng, HilbertKind::Complex, k);
      const auto a = embed_hilbert(x), b = embed_hilbert(apply(U, x));
      CHECK(std::fabs(a.s - b.s) < 1e-12);
      CHECK(max_magnitude(b.u - apply(U, a.u)) < 1e-12);
      const auto Uq = U.map([](const MachineComplex& z) { return Q(z); });
      CHECK(max_magnitude(b.P - Uq * a.P * dagger(Uq)) < 1e-12);
    }
  }
}

TEST_CASE("alternative real embedding") {
  Rng rng(7);
  for (std::size_t k : {1u, 2u, 4u}) {
    for (int t = 0; t < 10; ++t) {
      const auto x = scaled_point(rng, HilbertKind::Real, k);
      const auto v = random_hilbert_vector(rng, HilbertKind::Real, k);
      const auto w = random_hilbert_vector(rng, HilbertKind::Real, k);
      CHECK(real_alt_pullback_residual(x, v, w) < 1e-6);
    }
  }
  const HVec z{Q(MachineComplex(0.0, 1.0))};
  CHECK_THROWS_AS(real_alt_pullback_residual(z, z, z), DomainError);
}

TEST_CASE("embed_projection examples") {
  const MC d{{1.0, 0.0}, {0.0, 0.0}};
  const auto t = embed_projection(d);
  CHECK(t.x == 1.0);
  CHECK(t.Q == d);
  MC E(4);
  E(0, 0) = MachineComplex(1.0);
  CHECK(t.P == E);

  const MC q{{1.0, 1.0}, {0.0, 0.0}};
  const auto u = embed_projection(q);
  CHECK(u.x == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-15));
  CHECK(trace(dagger(u.Q) * u.Q).re() == doctest::Approx(u.x * u.x).epsilon(1e-14));
  const auto m = embed_projection(q, -1);
  CHECK(m.x == -u.x);
  CHECK(max_magnitude(m.Q + u.Q) == 0.0);
  CHECK(max_magnitude(m.P + u.P) == 0.0);
  CHECK_THROWS_AS(embed_projection(MC::identity(2)), NotProjection);
}

TEST_CASE("variety residuals") {
  Rng rng(8);
  for (std::size_t n : {2u, 3u}) {
    for (int t = 0; t < 20; ++t) {
      const auto q = sample_projection<MachineComplex>(rng, n);
      for (int sheet : {1, -1}) {
        const auto e = embed_projection(q, sheet);
        for (double r : variety_residuals(e)) CHECK(r <= 1e-12);
        CHECK(max_magnitude(variety_to_projection(e) - q) <= 1e-12);
        CHECK(triple_distance(embed_projection(variety_to_projection(e), sheet), e) <= 1e-10);
        CHECK(sheet * e.x > 0.0);
      }
    }
  }

  const MC d{{1.0, 0.0}, {0.0, 0.0}};
  const EmbeddedTriple zero_op{1.0, d, MC(4), 1};
  CHECK(variety_residuals(zero_op)[4] == 1.0);

  auto perturbed = embed_projection(d);
  perturbed.Q(0, 1) = MachineComplex(1e-3);
  double worst = 0.0;
  for (double r : variety_residuals(perturbed)) worst = std::max(worst, r);
  CHECK(worst >= 1e-3);
  CHECK_THROWS_AS(variety_to_projection(perturbed), DomainError);

  auto wrong_sheet = embed_projection(d);
  wrong_sheet.sheet = -1;
  CHECK(variety_residuals(wrong_sheet)[6] == 1.0);
}

TEST_CASE("round trips") {
  const MC d{{1.0, 0.0}, {0.0, 0.0}};
  CHECK(variety_to_projection(embed_projection(d)) == d);
  const MC q{{1.0, 1.0}, {0.0, 0.0}};
  CHECK(max_magnitude(variety_to_projection(embed_projection(q)) - q) < 1e-12);
  CHECK(max_magnitude(variety_to_projection(embed_projection(q, -1)) - q) < 1e-12);
}

TEST_CASE("metric along projections is twice Re h~") {
  Rng rng(9);
  for (std::size_t n : {2u, 3u}) {
    for (int t = 0; t < 20; ++t) {
      const auto c = cover_lift(sample_projection<MachineComplex>(rng, n));
      auto a = sample_tangent(rng, c.q), b = sample_tangent(rng, c.q);
      // unit directions keep the finite-difference error on a fixed scale
      a = MachineComplex(1.0 / std::sqrt(trace_norm(a).re())) * a;
      b = MachineComplex(1.0 / std::sqrt(trace_norm(b).re())) * b;
      const double g = projection_metric(c.q, a, b);
      CHECK(g == doctest::Approx(2.0 * h_tilde(c, a, b).re()).epsilon(1e-12));
      const double pulled = pullback_metric(flatten_to_hvec(c.q), flatten_to_hvec(a), flatten_to_hvec(b));
      CHECK(std::fabs(pulled - 2.0 * h_tilde(c, a, b).re()) < 1e-6);
    }
  }
}

TEST_CASE("the ray [[1,t],[0,0]] has unbounded length") {
  // g along the ray is (2 + t^2)/(1 + t^2)^{3/2}, so the length grows like 2 sqrt(T)
  double previous = 0.0;
  for (double T : {1.0, 10.0, 100.0, 1000.0}) {
    const double len = ray_length(T);
    CHECK(len > previous);
    CHECK(len > std::sqrt(T));
    previous = len;
  }
  CHECK(ray_length(1000.0) / ray_length(10.0) > 5.0);
}
