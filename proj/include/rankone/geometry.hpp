#pragma once

// Structure on rank-1 projections: the operator L, the 2-form Omega, the
// hermitian form h, and on the cover {(q, r) : r^2 Tr(q^dagger q) = 1} the
// normalized complex structure I, the form h~, the potential and the maps
// built from the square-root involution.

#include <optional>

#include "rankone/projspace.hpp"

namespace rankone {

/// Tr(q^dagger q)
template <StarRing T>
T trace_norm(const Matrix<T>& q) {
  return trace(dagger(q) * q);
}

/// L_q(a) = 2[a^dagger, q q^dagger q] + [q a^dagger q, q^dagger], valid over any *-ring.
template <StarRing T>
Matrix<T> L_general(const Matrix<T>& q, const Matrix<T>& a) {
  const auto ad = dagger(a);
  const auto qd = dagger(q);
  return T::from_int(2) * commutator(ad, q * qd * q) + commutator(q * ad * q, qd);
}

/// L_q(a) without the tangency check. Commutative rings use the closed form
/// 2 Tr(q^dagger q)[a^dagger, q] + Tr(a^dagger q)[q, q^dagger].
template <StarRing T>
Matrix<T> L_unchecked(const Matrix<T>& q, const Matrix<T>& a) {
  if constexpr (ring_traits<T>::commutative) {
    const auto ad = dagger(a);
    const auto qd = dagger(q);
    return (T::from_int(2) * trace_norm(q)) * commutator(ad, q) + trace(ad * q) * commutator(q, qd);
  } else {
    return L_general(q, a);
  }
}

template <StarRing T>
Matrix<T> L(const Matrix<T>& q, const Matrix<T>& a, double tol = default_tol<T>()) {
  require_tangent(q, a, tol);
  return L_unchecked(q, a);
}

/// L_q(L_q(a)) + 4 Tr(q^dagger q)^3 a
template <StarRing T>
Matrix<T> main_identity_residual(const Matrix<T>& q, const Matrix<T>& a) {
  const T t = trace_norm(q);
  return L_unchecked(q, L_unchecked(q, a)) + (T::from_int(4) * t * t * t) * a;
}

/// Omega_q(a, b) = Tr(q [a, b])
template <StarRing T>
T omega(const Matrix<T>& q, const Matrix<T>& a, const Matrix<T>& b) {
  return trace(q * commutator(a, b));
}

/// Tr(a[b,c]) - Tr(b[a,c]) + Tr(c[a,b])
template <StarRing T>
T closedness_residual(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
  return trace(a * commutator(b, c)) - trace(b * commutator(a, c)) + trace(c * commutator(a, b));
}

/// h_q(a, b) = 2 Tr(q^dagger q) Tr(a b^dagger) - Tr(q^dagger a) Tr(q b^dagger)
template <StarRing T>
T h(const Matrix<T>& q, const Matrix<T>& a, const Matrix<T>& b) {
  const auto bd = dagger(b);
  const auto qd = dagger(q);
  return T::from_int(2) * trace_norm(q) * trace(a * bd) - trace(qd * a) * trace(q * bd);
}

// ---------------------------------------------------------------- cover

template <StarRing T>
struct CoverPoint {
  Matrix<T> q;
  T r;
};

/// r^2 Tr(q^dagger q) - 1
template <StarRing T>
T cover_residual(const CoverPoint<T>& c) {
  return c.r * c.r * trace_norm(c.q) - T::from_int(1);
}

template <StarRing T>
bool is_cover_point(const CoverPoint<T>& c, double tol = default_tol<T>()) {
  return within(cover_residual(c), tol) && within(involve(c.r) - c.r, tol);
}

/// (q, +-Tr(q^dagger q)^{-1/2}); sign > 0 picks the positive branch.
template <StarRing T>
CoverPoint<T> cover_lift(const Matrix<T>& q, int sign = 1) {
  const T t = trace_norm(q);
  const auto root = self_adjoint_sqrt(t);
  if (!root) throw NoSquareRoot("Tr(q^dagger q) has no self-adjoint square root in " + ring_traits<T>::name());
  const auto inv = try_inverse(*root);
  if (!inv) throw NoSquareRoot("square root of Tr(q^dagger q) is not invertible in " + ring_traits<T>::name());
  return {q, sign > 0 ? *inv : -*inv};
}

/// Random cover point by rejection: resamples q until Tr(q^dagger q) has a
/// self-adjoint invertible square root.
template <StarRing T>
CoverPoint<T> sample_cover_point(Rng& rng, std::size_t n, int sign = 1, int max_attempts = 100000,
                                 const SamplingOptions& opt = {}) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    auto q = sample_projection<T>(rng, n, opt);
    if (involve(trace_norm(q)) == trace_norm(q) && self_adjoint_sqrt(trace_norm(q))) {
      try {
        return cover_lift(q, sign);
      } catch (const NoSquareRoot&) {
      }
    }
  }
  throw SamplingError("no cover point over " + ring_traits<T>::name() + " within " + std::to_string(max_attempts) +
                      " attempts");
}

/// The unique s with (q + eps a, r + eps s) on the cover over dual numbers:
/// s = -(r^3/2)(Tr(q a^dagger) + Tr(q a q^dagger) + Tr(q q^dagger a)).
template <StarRing T>
T cover_tangent_lift(const CoverPoint<T>& c, const Matrix<T>& a) {
  const auto hf = half<T>();
  if (!hf) throw RingRefused("cover tangent lift needs 1/2 in " + ring_traits<T>::name());
  const auto qd = dagger(c.q);
  const T sum = trace(c.q * dagger(a)) + trace(c.q * a * qd) + trace(c.q * qd * a);
  return -(*hf * c.r * c.r * c.r) * sum;
}

template <StarRing T>
Matrix<Dual<T>> dual_matrix(const Matrix<T>& base, const Matrix<T>& tangent) {
  Matrix<Dual<T>> m(base.n());
  for (std::size_t i = 0; i < base.n(); ++i)
    for (std::size_t j = 0; j < base.n(); ++j) m(i, j) = Dual<T>(base(i, j), tangent(i, j));
  return m;
}

template <StarRing T>
Matrix<T> eps_part(const Matrix<Dual<T>>& m) {
  return m.map([](const Dual<T>& x) { return x.b(); });
}

template <StarRing T>
Matrix<T> base_part(const Matrix<Dual<T>>& m) {
  return m.map([](const Dual<T>& x) { return x.a(); });
}

/// The cover equation evaluated at (q + eps a, r + eps s) over dual numbers.
template <StarRing T>
Dual<T> dual_cover_residual(const CoverPoint<T>& c, const Matrix<T>& a, const T& s) {
  return cover_residual(CoverPoint<Dual<T>>{dual_matrix(c.q, a), Dual<T>(c.r, s)});
}

/// I_(q,r)(a) = (r^3/2) L_q(a)
template <StarRing T>
Matrix<T> Istruct_unchecked(const CoverPoint<T>& c, const Matrix<T>& a) {
  const auto hf = half<T>();
  if (!hf) throw RingRefused("I needs 1/2 in " + ring_traits<T>::name());
  return (*hf * c.r * c.r * c.r) * L_unchecked(c.q, a);
}

template <StarRing T>
Matrix<T> Istruct(const CoverPoint<T>& c, const Matrix<T>& a, double tol = default_tol<T>()) {
  require_tangent(c.q, a, tol);
  return Istruct_unchecked(c, a);
}

/// h~(a, b) = r Tr(a b^dagger) - (r^3/2) Tr(q^dagger a) Tr(q b^dagger)
template <StarRing T>
T h_tilde(const CoverPoint<T>& c, const Matrix<T>& a, const Matrix<T>& b) {
  const auto hf = half<T>();
  if (!hf) throw RingRefused("h~ needs 1/2 in " + ring_traits<T>::name());
  const auto bd = dagger(b);
  return c.r * trace(a * bd) - (*hf * c.r * c.r * c.r) * trace(dagger(c.q) * a) * trace(c.q * bd);
}

/// r^{-1}, which is sqrt(Tr(q^dagger q)) on the positive branch.
template <StarRing T>
T potential(const CoverPoint<T>& c) {
  const auto inv = try_inverse(c.r);
  if (!inv) throw RingRefused("potential needs r invertible");
  return *inv;
}

// ---------------------------------------------------------------- square-root involution maps

/// (w, r) -> ((w + w^*)/2 + x r [w, w^*]/2, r) for a central x with x^2 = -1.
/// Applying it twice gives (w^*, r) when x^* = -x.
template <StarRing S>
CoverPoint<S> rootinv_map(const S& x, const CoverPoint<S>& c) {
  static_assert(ring_traits<S>::commutative, "root involution map needs a commutative ring");
  if (!(x * x == S::from_int(-1))) throw RingRefused("x^2 != -1");
  const auto hf = half<S>();
  if (!hf) throw RingRefused("root involution map needs 1/2 in " + ring_traits<S>::name());
  const auto wd = dagger(c.q);
  return {*hf * (c.q + wd) + (x * c.r * *hf) * commutator(c.q, wd), c.r};
}

template <StarRing T>
Matrix<TwistedBicomplex<T>> to_twisted_bicomplex(const Matrix<T>& m) {
  return m.map([](const T& x) { return TwistedBicomplex<T>(x); });
}

/// Phi(q, r) = ((q + q^*)/2 + j r [q, q^*]/2, r) in R[j]/(j^2+1) with the
/// involution (a + j b)^dagger = a^* - j b^*.
template <StarRing T>
CoverPoint<TwistedBicomplex<T>> bicomplex_map(const CoverPoint<T>& c) {
  using B = TwistedBicomplex<T>;
  return rootinv_map(B::generator(), CoverPoint<B>{to_twisted_bicomplex(c.q), B(c.r)});
}

/// (q, r) -> ((q + q^*)/2 + i r [q, q^*]/2, r) for the ring's central i.
template <StarRing T>
CoverPoint<T> internal_i_map(const CoverPoint<T>& c) {
  const auto i = ring_traits<T>::imaginary_unit();
  if (!i) throw RingRefused(ring_traits<T>::name() + " has no central i");
  return rootinv_map(*i, c);
}

/// Derivative of internal_i_map at c along the cover tangent (a, s(a)).
template <StarRing T>
Matrix<T> internal_i_derivative(const CoverPoint<T>& c, const Matrix<T>& a) {
  using D = Dual<T>;
  const auto i = ring_traits<T>::imaginary_unit();
  if (!i) throw RingRefused(ring_traits<T>::name() + " has no central i");
  const CoverPoint<D> lifted{dual_matrix(c.q, a), D(c.r, cover_tangent_lift(c, a))};
  return eps_part(rootinv_map(D(*i), lifted).q);
}

/// Derivative of bicomplex_map at c along the cover tangent (a, s(a)).
template <StarRing T>
Matrix<TwistedBicomplex<T>> bicomplex_derivative(const CoverPoint<T>& c, const Matrix<T>& a) {
  using D = Dual<T>;
  using B = TwistedBicomplex<D>;
  const CoverPoint<D> lifted{dual_matrix(c.q, a), D(c.r, cover_tangent_lift(c, a))};
  const auto image = rootinv_map(B::generator(), CoverPoint<B>{to_twisted_bicomplex(lifted.q), B(lifted.r)});
  return image.q.map([](const B& x) { return TwistedBicomplex<T>(x.a().b(), x.b().b()); });
}

/// dPhi(I a) - i dPhi(a) for the internal-i map.
template <StarRing T>
Matrix<T> internal_i_intertwining_residual(const CoverPoint<T>& c, const Matrix<T>& a) {
  const T i = *ring_traits<T>::imaginary_unit();
  return internal_i_derivative(c, Istruct(c, a)) - i * internal_i_derivative(c, a);
}

/// dPhi(I a) - j dPhi(a) for the bicomplex map.
template <StarRing T>
Matrix<TwistedBicomplex<T>> bicomplex_intertwining_residual(const CoverPoint<T>& c, const Matrix<T>& a) {
  return bicomplex_derivative(c, Istruct(c, a)) - TwistedBicomplex<T>::generator() * bicomplex_derivative(c, a);
}

// ---------------------------------------------------------------- polarity

/// Omega_{q^*}(a^*, b^*) + Omega_q(a, b)^*
template <StarRing T>
T antisymplectic_residual(const Matrix<T>& q, const Matrix<T>& a, const Matrix<T>& b) {
  return omega(dagger(q), dagger(a), dagger(b)) + involve(omega(q, a, b));
}

template <StarRing T>
struct Polarization {
  Matrix<T> plus;   // r^2 q q^dagger
  Matrix<T> minus;  // r^2 q^dagger q
};

template <StarRing T>
Polarization<T> polarization_split(const CoverPoint<T>& c) {
  const T r2 = c.r * c.r;
  const auto qd = dagger(c.q);
  return {r2 * (c.q * qd), r2 * (qd * c.q)};
}

/// [q, [q, a]] - a, zero for tangent a.
template <StarRing T>
Matrix<T> polarity_square_residual(const Matrix<T>& q, const Matrix<T>& a) {
  return commutator(q, commutator(q, a)) - a;
}

}  // namespace rankone
