#pragma once

// Rings with involution. Every element type is an immutable value with a
// canonical representation, so equality of exact elements is structural.
//
// Interface (free functions found by ADL, plus ring_traits<T>):
//   T::from_int(k), + - * unary-, ==, involve(x), is_zero(x), magnitude(x),
//   try_inverse(x), self_adjoint_sqrt(x), ring_traits<T>::{name, commutative,
//   exact, finite, random, imaginary_unit}.

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "rankone/error.hpp"
#include "rankone/rational.hpp"

namespace rankone {

using Rng = std::mt19937_64;

template <class T>
struct ring_traits;

/// magnitude() of a nonzero exact element is never reported as 0.0.
inline double nonzero_floor(double m, bool zero) {
  if (zero) return 0.0;
  return std::max(m, std::numeric_limits<double>::min());
}

// ---------------------------------------------------------------- Rational

inline Rational involve(const Rational& x) { return x; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline double magnitude(const Rational& x) { return nonzero_floor(std::fabs(x.to_double()), x.is_zero()); }
inline std::optional<Rational> try_inverse(const Rational& x) { return x.inverse(); }
inline std::optional<Rational> self_adjoint_sqrt(const Rational& x) { return x.sqrt(); }

template <>
struct ring_traits<Rational> {
  static std::string name() { return "q"; }
  static constexpr bool commutative = true;
  static constexpr bool exact = true;
  static constexpr bool finite = false;
  static Rational random(Rng& rng, int range) {
    std::uniform_int_distribution<long> d(-range, range);
    return Rational(d(rng));
  }
  static std::optional<Rational> imaginary_unit() { return std::nullopt; }
};

// ---------------------------------------------------------------- Z/M

/// Residues modulo M with the trivial involution. M = p gives F_p.
template <unsigned M>
class ModInt {
  static_assert(M >= 2, "modulus must be at least 2");

 public:
  constexpr ModInt() = default;
  static constexpr ModInt from_int(long k) {
    long r = k % static_cast<long>(M);
    if (r < 0) r += M;
    return ModInt(static_cast<unsigned>(r), 0);
  }
  constexpr unsigned value() const { return v_; }

  friend constexpr ModInt operator+(ModInt a, ModInt b) { return ModInt((a.v_ + b.v_) % M, 0); }
  friend constexpr ModInt operator-(ModInt a, ModInt b) { return ModInt((a.v_ + M - b.v_) % M, 0); }
  friend constexpr ModInt operator*(ModInt a, ModInt b) {
    return ModInt(static_cast<unsigned>((static_cast<std::uint64_t>(a.v_) * b.v_) % M), 0);
  }
  constexpr ModInt operator-() const { return ModInt((M - v_) % M, 0); }
  friend constexpr bool operator==(ModInt a, ModInt b) = default;
  friend constexpr auto operator<=>(ModInt a, ModInt b) = default;

 private:
  constexpr ModInt(unsigned v, int) : v_(v) {}
  unsigned v_ = 0;
};

template <unsigned M>
ModInt<M> involve(ModInt<M> x) { return x; }
template <unsigned M>
bool is_zero(ModInt<M> x) { return x.value() == 0; }
template <unsigned M>
double magnitude(ModInt<M> x) {
  // distance to 0 in Z/M
  const unsigned v = x.value();
  return static_cast<double>(std::min(v, M - v));
}
template <unsigned M>
std::optional<ModInt<M>> try_inverse(ModInt<M> x) {
  long a = x.value(), b = M, s0 = 1, s1 = 0;
  while (b != 0) {
    const long q = a / b;
    a -= q * b; std::swap(a, b);
    s0 -= q * s1; std::swap(s0, s1);
  }
  if (a != 1) return std::nullopt;
  return ModInt<M>::from_int(s0);
}
template <unsigned M>
std::optional<ModInt<M>> self_adjoint_sqrt(ModInt<M> x) {
  for (unsigned k = 0; k < M; ++k) {
    const auto c = ModInt<M>::from_int(k);
    if (c * c == x) return c;
  }
  return std::nullopt;
}

template <unsigned M>
struct ring_traits<ModInt<M>> {
  static std::string name() { return "zmod:" + std::to_string(M); }
  static constexpr bool commutative = true;
  static constexpr bool exact = true;
  static constexpr bool finite = true;
  static constexpr unsigned modulus = M;
  static ModInt<M> random(Rng& rng, int /*range*/) {
    std::uniform_int_distribution<unsigned> d(0, M - 1);
    return ModInt<M>::from_int(d(rng));
  }
  static std::optional<ModInt<M>> imaginary_unit() { return std::nullopt; }
};

// ---------------------------------------------------------------- machine complex

/// Double-precision complex numbers with conjugation. Comparisons with a
/// tolerance live in the callers' configuration, never in the element.
struct MachineComplex {
  std::complex<double> z{};

  MachineComplex() = default;
  MachineComplex(double re, double im = 0.0) : z(re, im) {}  // NOLINT(google-explicit-constructor)
  explicit MachineComplex(std::complex<double> v) : z(v) {}
  static MachineComplex from_int(long k) { return MachineComplex(static_cast<double>(k)); }

  double re() const { return z.real(); }
  double im() const { return z.imag(); }

  friend MachineComplex operator+(MachineComplex a, MachineComplex b) { return MachineComplex(a.z + b.z); }
  friend MachineComplex operator-(MachineComplex a, MachineComplex b) { return MachineComplex(a.z - b.z); }
  friend MachineComplex operator*(MachineComplex a, MachineComplex b) { return MachineComplex(a.z * b.z); }
  MachineComplex operator-() const { return MachineComplex(-z); }
  friend bool operator==(MachineComplex a, MachineComplex b) { return a.z == b.z; }
};

inline MachineComplex involve(MachineComplex x) { return MachineComplex(std::conj(x.z)); }
inline bool is_zero(MachineComplex x) { return x.z == std::complex<double>{}; }
inline double magnitude(MachineComplex x) { return std::abs(x.z); }
inline std::optional<MachineComplex> try_inverse(MachineComplex x) {
  if (is_zero(x)) return std::nullopt;
  return MachineComplex(1.0 / x.z);
}
/// Positive square root of a (numerically) real positive value.
inline std::optional<MachineComplex> self_adjoint_sqrt(MachineComplex x) {
  if (!(x.re() > 0.0) || std::fabs(x.im()) > 1e-12 * x.re()) return std::nullopt;
  return MachineComplex(std::sqrt(x.re()));
}

template <>
struct ring_traits<MachineComplex> {
  static std::string name() { return "machine-complex"; }
  static constexpr bool commutative = true;
  static constexpr bool exact = false;
  static constexpr bool finite = false;
  static MachineComplex random(Rng& rng, int /*range*/) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    const double re = d(rng);
    return MachineComplex(re, d(rng));
  }
  static std::optional<MachineComplex> imaginary_unit() { return MachineComplex(0.0, 1.0); }
};

// ---------------------------------------------------------------- concept

template <class T>
concept StarRing = requires(const T& a, const T& b, Rng& rng) {
  { a + b } -> std::same_as<T>;
  { a - b } -> std::same_as<T>;
  { a * b } -> std::same_as<T>;
  { -a } -> std::same_as<T>;
  { a == b } -> std::convertible_to<bool>;
  { T::from_int(1) } -> std::same_as<T>;
  { involve(a) } -> std::same_as<T>;
  { is_zero(a) } -> std::same_as<bool>;
  { magnitude(a) } -> std::convertible_to<double>;
  { try_inverse(a) } -> std::same_as<std::optional<T>>;
  { ring_traits<T>::name() } -> std::convertible_to<std::string>;
  { ring_traits<T>::random(rng, 1) } -> std::same_as<T>;
  { ring_traits<T>::imaginary_unit() } -> std::same_as<std::optional<T>>;
  requires std::same_as<std::remove_cv_t<decltype(ring_traits<T>::commutative)>, bool>;
  requires std::same_as<std::remove_cv_t<decltype(ring_traits<T>::exact)>, bool>;
};

template <class T>
concept CommutativeStarRing = StarRing<T> && ring_traits<T>::commutative;

// ---------------------------------------------------------------- quadratic extensions

/// B[g]/(g^2 - Square) with g central and (a + g b)^* = a^* + Sign * g b^*.
///
/// Instances: Gaussian rationals (Square=-1, Sign=-1), bicomplex numbers
/// (Square=-1, Sign=+1), the twisted bicomplex involution (Square=-1,
/// Sign=-1 over a base with i), split-complex (Square=+1, Sign=-1) and dual
/// numbers (Square=0, Sign=+1). The base must be commutative.
template <class B, int Square, int Sign>
class QuadExt {
  static_assert(Sign == 1 || Sign == -1);

 public:
  using Base = B;
  static constexpr int square = Square;
  static constexpr int sign = Sign;

  QuadExt() : a_(B::from_int(0)), b_(B::from_int(0)) {}
  QuadExt(B a, B b) : a_(std::move(a)), b_(std::move(b)) {}
  explicit QuadExt(B a) : a_(std::move(a)), b_(B::from_int(0)) {}
  static QuadExt from_int(long k) { return QuadExt(B::from_int(k), B::from_int(0)); }
  /// The adjoined generator g.
  static QuadExt generator() { return QuadExt(B::from_int(0), B::from_int(1)); }

  const B& a() const { return a_; }
  const B& b() const { return b_; }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    B re = x.a_ * y.a_;
    if constexpr (Square == 1) re = re + x.b_ * y.b_;
    if constexpr (Square == -1) re = re - x.b_ * y.b_;
    if constexpr (Square != 0 && Square != 1 && Square != -1) re = re + B::from_int(Square) * x.b_ * y.b_;
    return {re, x.a_ * y.b_ + x.b_ * y.a_};
  }
  QuadExt operator-() const { return {-a_, -b_}; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  B a_;
  B b_;
};

template <class B, int S, int G>
QuadExt<B, S, G> involve(const QuadExt<B, S, G>& x) {
  if constexpr (G == 1) return {involve(x.a()), involve(x.b())};
  else return {involve(x.a()), -involve(x.b())};
}
template <class B, int S, int G>
bool is_zero(const QuadExt<B, S, G>& x) { return is_zero(x.a()) && is_zero(x.b()); }
template <class B, int S, int G>
double magnitude(const QuadExt<B, S, G>& x) { return std::max(magnitude(x.a()), magnitude(x.b())); }

/// (a + g b)^{-1} = (a - g b) / (a^2 - Square b^2).
template <class B, int S, int G>
std::optional<QuadExt<B, S, G>> try_inverse(const QuadExt<B, S, G>& x) {
  const B norm = x.a() * x.a() - B::from_int(S) * x.b() * x.b();
  const auto inv = try_inverse(norm);
  if (!inv) return std::nullopt;
  return QuadExt<B, S, G>(x.a() * *inv, -(x.b() * *inv));
}

/// Self-adjoint square root, when the ring has one for this element.
template <class B, int S, int G>
std::optional<QuadExt<B, S, G>> self_adjoint_sqrt(const QuadExt<B, S, G>& x) {
  using E = QuadExt<B, S, G>;
  if (!(involve(x) == x)) return std::nullopt;
  if constexpr (S == 0) {
    // (s + eps t)^2 = s^2 + 2 eps s t
    const auto s = self_adjoint_sqrt(x.a());
    if (!s) return std::nullopt;
    const auto inv = try_inverse(B::from_int(2) * *s);
    if (!inv) return std::nullopt;
    return E(*s, x.b() * *inv);
  } else {
    if (is_zero(x.b())) {
      if (auto s = self_adjoint_sqrt(x.a())) return E(*s);
    }
    if constexpr (S == -1 && G == 1) {
      // (r0 + g r1)^2 = r0^2 - r1^2 + 2 g r0 r1 with r0, r1 self-adjoint in B.
      const B c0 = x.a(), c1 = x.b();
      const auto m = self_adjoint_sqrt(c0 * c0 + c1 * c1);
      if (!m) return std::nullopt;
      const auto half = try_inverse(B::from_int(2));
      if (!half) return std::nullopt;
      auto r0 = self_adjoint_sqrt((c0 + *m) * *half);
      if (!r0) return std::nullopt;
      B r1 = B::from_int(0);
      if (!is_zero(*r0)) {
        const auto inv = try_inverse(B::from_int(2) * *r0);
        if (!inv) return std::nullopt;
        r1 = c1 * *inv;
      } else {
        auto s = self_adjoint_sqrt(-c0);
        if (!s) return std::nullopt;
        r1 = *s;
      }
      E r(*r0, r1);
      if (!(r * r == x) || !(involve(r) == r)) return std::nullopt;
      return r;
    }
    return std::nullopt;
  }
}

template <class B, int S, int G>
struct ring_traits<QuadExt<B, S, G>> {
  using E = QuadExt<B, S, G>;
  static std::string name() {
    if constexpr (std::is_same_v<B, Rational> && S == -1 && G == -1) return "gaussian-q";
    else if constexpr (S == -1 && G == 1) return "bicomplex(" + ring_traits<B>::name() + ")";
    else if constexpr (S == -1 && G == -1) return "twisted-bicomplex(" + ring_traits<B>::name() + ")";
    else if constexpr (S == 1 && G == -1) return "split(" + ring_traits<B>::name() + ")";
    else if constexpr (S == 0) return "dual(" + ring_traits<B>::name() + ")";
    else return "quadext(" + ring_traits<B>::name() + ")";
  }
  static constexpr bool commutative = ring_traits<B>::commutative;
  static constexpr bool exact = ring_traits<B>::exact;
  static constexpr bool finite = ring_traits<B>::finite;
  static E random(Rng& rng, int range) {
    B a = ring_traits<B>::random(rng, range);
    return E(std::move(a), ring_traits<B>::random(rng, range));
  }
  /// A central i with i^2 = -1 and i^* = -i, lifted from the base if it has one.
  static std::optional<E> imaginary_unit() {
    if (auto i = ring_traits<B>::imaginary_unit()) return E(*i);
    if constexpr (S == -1 && G == -1) return E::generator();
    return std::nullopt;
  }
};

template <class R>
using Gaussian = QuadExt<R, -1, -1>;
using GaussianQ = Gaussian<Rational>;
/// R[j]/(j^2+1), (a + j b)^* = a^* + j b^*.
template <class R>
using Bicomplex = QuadExt<R, -1, 1>;
/// Same elements as Bicomplex<R> with (a + j b)^dagger = a^* - j b^*.
template <class R>
using TwistedBicomplex = QuadExt<R, -1, -1>;
using BicomplexQ = Bicomplex<GaussianQ>;
/// R[x]/(x^2-1), (a + x b)^* = a^* - x b^*.
template <class R>
using SplitComplex = QuadExt<R, 1, -1>;
using SplitComplexQ = SplitComplex<Rational>;
/// R[eps]/(eps^2), (s + eps t)^* = s^* + eps t^*.
template <class R>
using Dual = QuadExt<R, 0, 1>;

/// Reinterprets a*+jb with the other sign of the involution on j.
template <class B, int S, int G>
QuadExt<B, S, -G> retwist(const QuadExt<B, S, G>& x) {
  return {x.a(), x.b()};
}

// ---------------------------------------------------------------- skew quotient

/// R[x,*]/(x^2 + r) with x s = s^* x and (a + x b)^* = a^* - x b.
/// Noncommutative whenever the involution on R is nontrivial; R = GaussianQ,
/// r = 1 gives the rational quaternions.
template <class B, int R>
class SkewQuotient {
  static_assert(ring_traits<B>::commutative, "skew quotient needs a commutative base");

 public:
  using Base = B;
  static constexpr int r = R;

  SkewQuotient() : a_(B::from_int(0)), b_(B::from_int(0)) {}
  SkewQuotient(B a, B b) : a_(std::move(a)), b_(std::move(b)) {}
  explicit SkewQuotient(B a) : a_(std::move(a)), b_(B::from_int(0)) {}
  static SkewQuotient from_int(long k) { return SkewQuotient(B::from_int(k)); }
  static SkewQuotient x() { return SkewQuotient(B::from_int(0), B::from_int(1)); }

  const B& a() const { return a_; }
  const B& b() const { return b_; }

  friend SkewQuotient operator+(const SkewQuotient& u, const SkewQuotient& v) { return {u.a_ + v.a_, u.b_ + v.b_}; }
  friend SkewQuotient operator-(const SkewQuotient& u, const SkewQuotient& v) { return {u.a_ - v.a_, u.b_ - v.b_}; }
  /// (a + x b)(c + x d) = (ac - r b^* d) + x (a^* d + b c)
  friend SkewQuotient operator*(const SkewQuotient& u, const SkewQuotient& v) {
    B re = u.a_ * v.a_;
    if constexpr (R == 1) re = re - involve(u.b_) * v.b_;
    else if constexpr (R == -1) re = re + involve(u.b_) * v.b_;
    else re = re - B::from_int(R) * involve(u.b_) * v.b_;
    return {std::move(re), involve(u.a_) * v.b_ + u.b_ * v.a_};
  }
  SkewQuotient operator-() const { return {-a_, -b_}; }
  friend bool operator==(const SkewQuotient& u, const SkewQuotient& v) { return u.a_ == v.a_ && u.b_ == v.b_; }

 private:
  B a_;
  B b_;
};

template <class B, int R>
SkewQuotient<B, R> involve(const SkewQuotient<B, R>& w) { return {involve(w.a()), -w.b()}; }
template <class B, int R>
bool is_zero(const SkewQuotient<B, R>& w) { return is_zero(w.a()) && is_zero(w.b()); }
template <class B, int R>
double magnitude(const SkewQuotient<B, R>& w) { return std::max(magnitude(w.a()), magnitude(w.b())); }

/// N(w) = w^* w = a^* a + r b^* b, an element of the (self-adjoint) base.
template <class B, int R>
B skew_norm(const SkewQuotient<B, R>& w) {
  return involve(w.a()) * w.a() + B::from_int(R) * involve(w.b()) * w.b();
}

template <class B, int R>
std::optional<SkewQuotient<B, R>> try_inverse(const SkewQuotient<B, R>& w) {
  const auto inv = try_inverse(skew_norm(w));
  if (!inv) return std::nullopt;
  const auto c = involve(w);
  return SkewQuotient<B, R>(*inv * c.a(), *inv * c.b());
}

template <class B, int R>
std::optional<SkewQuotient<B, R>> self_adjoint_sqrt(const SkewQuotient<B, R>&) {
  return std::nullopt;
}

template <class B, int R>
struct ring_traits<SkewQuotient<B, R>> {
  using E = SkewQuotient<B, R>;
  static std::string name() {
    if constexpr (std::is_same_v<B, GaussianQ> && R == 1) return "quaternion-q";
    else return "skew(" + ring_traits<B>::name() + "," + std::to_string(R) + ")";
  }
  static constexpr bool commutative = false;
  static constexpr bool exact = ring_traits<B>::exact;
  static constexpr bool finite = ring_traits<B>::finite;
  static E random(Rng& rng, int range) {
    B a = ring_traits<B>::random(rng, range);
    return E(std::move(a), ring_traits<B>::random(rng, range));
  }
  static std::optional<E> imaginary_unit() { return std::nullopt; }
};

using QuaternionQ = SkewQuotient<GaussianQ, 1>;
/// Double-precision quaternions, used for quaternionic Hilbert spaces.
using MachineQuaternion = SkewQuotient<MachineComplex, 1>;

// ---------------------------------------------------------------- generic helpers

/// x^*
template <StarRing T>
T involve_element(const T& x) { return involve(x); }

/// 1/2 when 2 is invertible.
template <StarRing T>
std::optional<T> half() { return try_inverse(T::from_int(2)); }

template <StarRing T>
bool has_half() { return half<T>().has_value(); }

/// s + eps t in R[eps]/(eps^2).
template <StarRing T>
Dual<T> dual_extend_lift(const T& s, const T& t) { return Dual<T>(s, t); }

/// Drops eps: the canonical quotient R[eps]/(eps^2) -> R.
template <StarRing T>
T dual_base(const Dual<T>& x) { return x.a(); }

/// The eps-coefficient.
template <StarRing T>
T dual_tangent(const Dual<T>& x) { return x.b(); }

/// (x + x^*)/2
template <StarRing T>
T self_adjoint_part(const T& x) {
  const auto h = half<T>();
  if (!h) throw RingRefused("self-adjoint part needs 1/2 in " + ring_traits<T>::name());
  return *h * (x + involve(x));
}

/// Real part of a machine complex or machine quaternion.
inline double real_part(const MachineComplex& x) { return x.re(); }
inline double real_part(const MachineQuaternion& x) { return x.a().re(); }

}  // namespace rankone
