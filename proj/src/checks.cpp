#include "rankone/checks.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <optional>
#include <type_traits>
#include <utility>

#include "rankone/embedding.hpp"
#include "rankone/geometry.hpp"
#include "rankone/numerics.hpp"

namespace rankone {
namespace {

constexpr unsigned kMinModulus = 2;
constexpr unsigned kMaxVerifyModulus = 13;
constexpr unsigned kMaxEnumerateModulus = 32;

const std::vector<std::string> kChecks = {
    "main-identity",  "closed-form",   "h-compat",           "cover-etale",        "i-square",
    "intertwine-bicomplex", "intertwine-i", "antisymplectic", "polarization",     "quaternion-relations",
    "nondegenerate",  "nijenhuis",     "potential",          "embedding-pullback", "real-alt-embedding",
    "variety",        "variety-roundtrip"};

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::optional<unsigned> parse_modulus(const std::string& tag) {
  std::string digits;
  bool prime = false;
  if (tag.rfind("fp:", 0) == 0) {
    digits = tag.substr(3);
    prime = true;
  } else if (tag.rfind("zmod:", 0) == 0) {
    digits = tag.substr(5);
  } else {
    return std::nullopt;
  }
  unsigned m = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
  if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty())
    throw ParseError("bad modulus in ring tag '" + tag + "'");
  if (m < 2) throw ParseError("modulus must be at least 2 in '" + tag + "'");
  if (prime && !is_prime(m)) throw ParseError(std::to_string(m) + " is not prime in '" + tag + "'");
  return m;
}

template <unsigned Lo, class F, unsigned... Ks>
auto dispatch_modulus(unsigned m, F&& f, std::integer_sequence<unsigned, Ks...>) {
  using R = decltype(f(std::type_identity<ModInt<Lo>>{}));
  std::optional<R> out;
  ((m == Lo + Ks ? (out.emplace(f(std::type_identity<ModInt<Lo + Ks>>{})), true) : false) || ...);
  if (!out)
    throw RingRefused("modulus " + std::to_string(m) + " is outside the supported range " + std::to_string(Lo) +
                      ".." + std::to_string(Lo + sizeof...(Ks) - 1));
  return std::move(*out);
}

template <class F>
auto with_ring(const std::string& tag, F&& f) {
  if (tag == "rational" || tag == "q") return f(std::type_identity<Rational>{});
  if (tag == "gaussian-q") return f(std::type_identity<GaussianQ>{});
  if (tag == "bicomplex") return f(std::type_identity<BicomplexQ>{});
  if (tag == "split") return f(std::type_identity<SplitComplexQ>{});
  if (tag == "quaternion-q") return f(std::type_identity<QuaternionQ>{});
  if (tag == "machine-complex") return f(std::type_identity<MachineComplex>{});
  if (const auto m = parse_modulus(tag))
    return dispatch_modulus<kMinModulus>(
        *m, f, std::make_integer_sequence<unsigned, kMaxVerifyModulus - kMinModulus + 1>{});
  throw ParseError("unknown ring '" + tag + "'");
}

// ---------------------------------------------------------------- residual bookkeeping

/// Max fold of residuals. Machine residuals are divided by max(1, scale).
template <StarRing T>
struct Residual {
  double value = 0.0;

  void add(double r, double scale = 1.0) {
    if (!ring_traits<T>::exact) r /= std::max(1.0, scale);
    value = std::isnan(r) ? INFINITY : std::max(value, r);
  }
  void add(const Matrix<T>& m, double scale = 1.0) { add(max_magnitude(m), scale); }
  void add_scalar(const T& x, double scale = 1.0) { add(magnitude(x), scale); }
  void require(bool ok) {
    if (!ok) value = std::max(value, 1.0);
  }
};

template <StarRing T>
constexpr bool has_cover_structure() {
  return ring_traits<T>::commutative;
}

template <StarRing T>
void require_commutative(const char* check) {
  if constexpr (!ring_traits<T>::commutative)
    throw RingRefused(std::string(check) + " needs a commutative ring, got " + ring_traits<T>::name());
}

template <StarRing T>
void require_half(const char* check) {
  if (!has_half<T>()) throw RingRefused(std::string(check) + " needs 1/2 in " + ring_traits<T>::name());
}

template <StarRing T>
void require_machine_complex(const char* check) {
  if constexpr (!std::is_same_v<T, MachineComplex>)
    throw RingRefused(std::string(check) + " runs over machine-complex only, got " + ring_traits<T>::name());
}

/// Real part of a rational quaternion a + x b with a in Q(i).
Rational quaternion_real_part(const QuaternionQ& w) { return w.a().a(); }

// ---------------------------------------------------------------- algebraic checks

template <StarRing T>
double main_identity_trial(Rng& rng, std::size_t n) {
  Residual<T> res;
  const auto q = sample_projection<T>(rng, n);
  const auto a = sample_tangent(rng, q);
  const T t = trace_norm(q);
  const auto La = L_unchecked(q, a);
  const double tm = magnitude(t);
  res.add(L_unchecked(q, La) + (T::from_int(4) * t * t * t) * a, 4.0 * tm * tm * tm * max_magnitude(a));
  res.add(tangent_residual(q, La), max_magnitude(La));
  if constexpr (ring_traits<T>::commutative) {
    const T s = ring_traits<T>::random(rng, 2);
    res.add(L_unchecked(q, s * a) - involve(s) * La, magnitude(s) * max_magnitude(La));
  }
  return res.value;
}

template <StarRing T>
double closed_form_trial(Rng& rng, std::size_t n, double step) {
  Residual<T> res;
  const auto q = sample_projection<T>(rng, n);
  const auto a = sample_tangent(rng, q), b = sample_tangent(rng, q), c = sample_tangent(rng, q);
  if constexpr (std::is_same_v<T, MachineComplex>) {
    res.add(dOmega_residual(q, a, b, c, step));
  } else if constexpr (std::is_same_v<T, QuaternionQ>) {
    res.add(magnitude(quaternion_real_part(closedness_residual(a, b, c))));
  } else if constexpr (ring_traits<T>::commutative) {
    res.add_scalar(closedness_residual(a, b, c));
  } else {
    throw RingRefused("closed-form has no reading over " + ring_traits<T>::name());
  }
  return res.value;
}

template <StarRing T>
double h_compat_trial(Rng& rng, std::size_t n) {
  require_commutative<T>("h-compat");
  Residual<T> res;
  if constexpr (ring_traits<T>::commutative) {
    const auto q = sample_projection<T>(rng, n);
    const auto a = sample_tangent(rng, q), b = sample_tangent(rng, q);
    const T hab = h(q, a, b);
    const double scale = magnitude(hab);
    res.add_scalar(hab - omega(q, a, L_unchecked(q, b)), scale);
    res.add_scalar(h(q, b, a) - involve(hab), scale);
    if (has_half<T>()) {
      const auto c = sample_cover_point<T>(rng, n);
      const auto x = sample_tangent(rng, c.q), y = sample_tangent(rng, c.q);
      const T ht = h_tilde(c, x, y);
      res.add_scalar(ht - omega(c.q, x, Istruct_unchecked(c, y)), magnitude(ht));
      res.add_scalar(h_tilde(c, y, x) - involve(ht), magnitude(ht));
    }
  }
  return res.value;
}

template <StarRing T>
double cover_etale_trial(Rng& rng, std::size_t n) {
  require_commutative<T>("cover-etale");
  require_half<T>("cover-etale");
  Residual<T> res;
  if constexpr (ring_traits<T>::commutative) {
    const auto c = sample_cover_point<T>(rng, n);
    const auto a = sample_tangent(rng, c.q);
    const T s = cover_tangent_lift(c, a);
    const auto at = dual_cover_residual(c, a, s);
    const double scale = magnitude(c.r) * magnitude(c.r) * magnitude(c.r) * max_magnitude(a);
    res.add(magnitude(at), scale);
    res.add_scalar(involve(s) - s, magnitude(s));
    // The eps-part of the cover equation is affine in s with slope 2 r Tr(q^dagger q),
    // which is invertible: s is the only solution.
    const T slope = dual_cover_residual(c, a, s + T::from_int(1)).b() - at.b();
    const T expected = T::from_int(2) * c.r * trace_norm(c.q);
    res.add_scalar(slope - expected, magnitude(expected));
    res.require(try_inverse(slope).has_value());
  }
  return res.value;
}

template <StarRing T>
double i_square_trial(Rng& rng, std::size_t n) {
  require_commutative<T>("i-square");
  require_half<T>("i-square");
  Residual<T> res;
  if constexpr (ring_traits<T>::commutative) {
    const auto c = sample_cover_point<T>(rng, n);
    const auto a = sample_tangent(rng, c.q);
    const auto Ia = Istruct_unchecked(c, a);
    res.add(Istruct_unchecked(c, Ia) + a, max_magnitude(a));
    res.add(tangent_residual(c.q, Ia), max_magnitude(Ia));
  }
  return res.value;
}

template <StarRing T>
double intertwine_bicomplex_trial(Rng& rng, std::size_t n) {
  require_commutative<T>("intertwine-bicomplex");
  require_half<T>("intertwine-bicomplex");
  Residual<T> res;
  if constexpr (ring_traits<T>::commutative) {
    using B = TwistedBicomplex<T>;
    const auto c = sample_cover_point<T>(rng, n);
    const auto a = sample_tangent(rng, c.q);
    const auto d = bicomplex_derivative(c, a);
    res.add(max_magnitude(bicomplex_intertwining_residual(c, a)), max_magnitude(d));

    const auto phi = bicomplex_map(c);
    const double qs = max_magnitude(phi.q);
    res.add(max_magnitude(phi.q * phi.q - phi.q), qs * qs);
    res.add(magnitude(cover_residual(phi)));
    const auto twice = rootinv_map(B::generator(), rootinv_map(B::generator(), phi));
    res.add(max_magnitude(twice.q - dagger(phi.q)), qs);
    res.add(magnitude(twice.r - phi.r), magnitude(phi.r));
    // the r-component of dPhi: the lift of j dPhi(a) at Phi(c) is s(I a)
    const auto lift = cover_tangent_lift(phi, B::generator() * d) - B(cover_tangent_lift(c, Istruct_unchecked(c, a)));
    res.add(magnitude(lift), magnitude(c.r) * magnitude(c.r) * magnitude(c.r) * max_magnitude(a) * qs * qs);
  }
  return res.value;
}

template <StarRing T>
double intertwine_i_trial(Rng& rng, std::size_t n) {
  require_commutative<T>("intertwine-i");
  require_half<T>("intertwine-i");
  if (!ring_traits<T>::imaginary_unit())
    throw RingRefused("intertwine-i needs a central i in " + ring_traits<T>::name());
  Residual<T> res;
  if constexpr (ring_traits<T>::commutative) {
    const auto c = sample_cover_point<T>(rng, n);
    const auto a = sample_tangent(rng, c.q);
    res.add(internal_i_intertwining_residual(c, a), max_magnitude(internal_i_derivative(c, a)));
    const auto once = internal_i_map(c);
    const auto twice = internal_i_map(once);
    res.add(twice.q - dagger(c.q), max_magnitude(c.q));
    res.add_scalar(twice.r - c.r, magnitude(c.r));
    res.add(once.q * once.q - once.q, max_magnitude(once.q) * max_magnitude(once.q));
    res.add_scalar(cover_residual(once));
  }
  return res.value;
}

template <StarRing T>
double antisymplectic_trial(Rng& rng, std::size_t n) {
  require_commutative<T>("antisymplectic");
  Residual<T> res;
  const auto q = sample_projection<T>(rng, n);
  const auto a = sample_tangent(rng, q), b = sample_tangent(rng, q);
  res.add_scalar(antisymplectic_residual(q, a, b),
                 max_magnitude(q) * max_magnitude(a) * max_magnitude(b));
  return res.value;
}

template <StarRing T>
double polarization_trial(Rng& rng, std::size_t n) {
  require_commutative<T>("polarization");
  Residual<T> res;
  if constexpr (ring_traits<T>::commutative) {
    const auto c = sample_cover_point<T>(rng, n);
    const auto p = polarization_split(c);
    res.add(p.plus * p.plus - p.plus, max_magnitude(p.plus));
    res.add(p.minus * p.minus - p.minus, max_magnitude(p.minus));
    res.add(dagger(p.plus) - p.plus, max_magnitude(p.plus));
    res.add(dagger(p.minus) - p.minus, max_magnitude(p.minus));
    const auto a = sample_tangent(rng, c.q), b = sample_tangent(rng, c.q);
    const double scale = max_magnitude(c.q) * max_magnitude(a) * max_magnitude(b);
    res.add_scalar(omega(c.q, c.q * a, c.q * b), scale);
    res.add_scalar(omega(c.q, a * c.q, b * c.q), scale);
    res.add(polarity_square_residual(c.q, a), max_magnitude(c.q) * max_magnitude(c.q) * max_magnitude(a));
  }
  return res.value;
}

template <StarRing T>
double quaternion_relations_trial(Rng& rng, std::size_t n) {
  require_commutative<T>("quaternion-relations");
  require_half<T>("quaternion-relations");
  const auto unit = ring_traits<T>::imaginary_unit();
  if (!unit) throw RingRefused("quaternion-relations needs a central i in " + ring_traits<T>::name());
  Residual<T> res;
  if constexpr (ring_traits<T>::commutative) {
    const T i = *unit;
    const auto c = sample_cover_point<T>(rng, n);
    const auto a = sample_tangent(rng, c.q);
    const auto I = [&](const Matrix<T>& x) { return Istruct_unchecked(c, x); };
    const auto iI = [&](const Matrix<T>& x) { return i * I(x); };
    const double scale = max_magnitude(a);
    res.add(I(I(a)) + a, scale);
    res.add(iI(iI(a)) + a, scale);
    res.add(I(i * a) + i * I(a), scale);
    if constexpr (std::is_same_v<T, MachineComplex>) {
      const auto haa = h_tilde(c, a, a);
      res.require(haa.re() > 0.0);
    }
  }
  return res.value;
}

template <StarRing T>
double nondegenerate_trial(Rng& rng, std::size_t n) {
  require_commutative<T>("nondegenerate");
  require_half<T>("nondegenerate");
  Residual<T> res;
  if constexpr (ring_traits<T>::commutative) {
    const auto c = sample_cover_point<T>(rng, n);
    const double tol = ring_traits<T>::exact ? 0.0 : 1e-9;
    const auto basis = tangent_basis(c.q, tol);
    res.require(basis.size() == 2 * (n - 1));
    Matrix<T> gram(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t l = 0; l < basis.size(); ++l) gram(k, l) = h_tilde(c, basis[k], basis[l]);
    const T det = determinant(gram);
    if constexpr (ring_traits<T>::exact)
      res.require(!is_zero(det));
    else
      res.require(magnitude(det) > 1e-10);
  }
  return res.value;
}

// ---------------------------------------------------------------- numeric checks

double nijenhuis_trial(Rng& rng, std::size_t n, double step) {
  const auto q = sample_projection<MachineComplex>(rng, n);
  return nijenhuis_residual(q, sample_tangent(rng, q), sample_tangent(rng, q), step);
}

HVec unit(const HVec& v) { return (1.0 / norm(v)) * v; }

double embedding_trial(Rng& rng, std::size_t n, double step) {
  double worst = 0.0;
  for (const auto kind : {HilbertKind::Real, HilbertKind::Complex, HilbertKind::Quaternionic, HilbertKind::MatrixComplex}) {
    const auto x = sample_hilbert_point(rng, kind, n);
    const auto v = unit(random_hilbert_vector(rng, kind, n));
    const auto w = unit(random_hilbert_vector(rng, kind, n));
    worst = std::max(worst, pullback_residual(x, v, w, {step}));
  }
  return worst;
}

double real_alt_trial(Rng& rng, std::size_t n, double step) {
  const auto x = sample_hilbert_point(rng, HilbertKind::Real, n);
  const auto v = unit(random_hilbert_vector(rng, HilbertKind::Real, n));
  const auto w = unit(random_hilbert_vector(rng, HilbertKind::Real, n));
  return real_alt_pullback_residual(x, v, w, {step});
}

double variety_trial(Rng& rng, std::size_t n) {
  const auto q = sample_projection<MachineComplex>(rng, n);
  const auto plus = embed_projection(q, 1);
  const auto minus = embed_projection(q, -1);
  double worst = 0.0;
  for (const auto& t : {plus, minus})
    for (double r : variety_residuals(t)) worst = std::max(worst, r);
  // sheets are swapped by the sign and never meet
  if (!(plus.x > 0.0 && minus.x < 0.0)) worst = std::max(worst, 1.0);
  worst = std::max({worst, std::fabs(plus.x + minus.x), max_magnitude(plus.Q + minus.Q), max_magnitude(plus.P + minus.P)});
  return worst;
}

double variety_roundtrip_trial(Rng& rng, std::size_t n) {
  const auto q = sample_projection<MachineComplex>(rng, n);
  double worst = 0.0;
  for (int sheet : {1, -1}) {
    const auto back = variety_to_projection(embed_projection(q, sheet));
    worst = std::max(worst, max_magnitude(back - q) / std::max(1.0, max_magnitude(q)));
  }
  return worst;
}

// ---------------------------------------------------------------- dispatch

template <StarRing T>
StructureReport run_typed(const std::string& check, const TrialConfig& cfg) {
  const std::size_t n = cfg.n;
  const double step = cfg.fd_step;
  auto run = [&](auto trial) { return run_trials(check, cfg, trial); };
  if (check == "main-identity") return run([&](Rng& r) { return main_identity_trial<T>(r, n); });
  if (check == "closed-form") return run([&](Rng& r) { return closed_form_trial<T>(r, n, step); });
  if (check == "h-compat") return run([&](Rng& r) { return h_compat_trial<T>(r, n); });
  if (check == "cover-etale") return run([&](Rng& r) { return cover_etale_trial<T>(r, n); });
  if (check == "i-square") return run([&](Rng& r) { return i_square_trial<T>(r, n); });
  if (check == "intertwine-bicomplex") return run([&](Rng& r) { return intertwine_bicomplex_trial<T>(r, n); });
  if (check == "intertwine-i") return run([&](Rng& r) { return intertwine_i_trial<T>(r, n); });
  if (check == "antisymplectic") return run([&](Rng& r) { return antisymplectic_trial<T>(r, n); });
  if (check == "polarization") return run([&](Rng& r) { return polarization_trial<T>(r, n); });
  if (check == "quaternion-relations") return run([&](Rng& r) { return quaternion_relations_trial<T>(r, n); });
  if (check == "nondegenerate") return run([&](Rng& r) { return nondegenerate_trial<T>(r, n); });

  require_machine_complex<T>(check.c_str());
  if (check == "nijenhuis") return run([&](Rng& r) { return nijenhuis_trial(r, n, step); });
  if (check == "potential") {
    if (n < 2) throw DomainError("potential needs n >= 2");
    const double constant = potential_constant(n, step);
    return run([&](Rng& r) {
      const auto q = sample_projection<MachineComplex>(r, n);
      return potential_deviation(q, sample_tangent(r, q), constant, step);
    });
  }
  if (check == "embedding-pullback") return run([&](Rng& r) { return embedding_trial(r, n, step); });
  if (check == "real-alt-embedding") return run([&](Rng& r) { return real_alt_trial(r, n, step); });
  if (check == "variety") return run([&](Rng& r) { return variety_trial(r, n); });
  if (check == "variety-roundtrip") return run([&](Rng& r) { return variety_roundtrip_trial(r, n); });
  throw ParseError("unknown check '" + check + "'");
}

}  // namespace

const std::vector<std::string>& check_names() { return kChecks; }

bool is_check(const std::string& name) { return std::find(kChecks.begin(), kChecks.end(), name) != kChecks.end(); }

void validate_ring(const std::string& tag) {
  with_ring(tag, [](auto) { return 0; });
}

bool ring_is_exact(const std::string& tag) {
  return with_ring(tag, [](auto t) { return ring_traits<typename decltype(t)::type>::exact; });
}

double default_tolerance(const std::string& check, const std::string& ring) {
  if (!is_check(check)) throw ParseError("unknown check '" + check + "'");
  if (ring_is_exact(ring)) return 0.0;
  if (check == "closed-form") return 1e-6;
  if (check == "nijenhuis") return 1e-4;
  if (check == "potential") return 1e-3;
  if (check == "embedding-pullback" || check == "real-alt-embedding") return 1e-6;
  if (check == "variety-roundtrip") return 1e-10;
  if (check == "nondegenerate") return 0.0;
  return 1e-12;
}

StructureReport run_check(const std::string& check, const TrialConfig& cfg) {
  if (!is_check(check)) throw ParseError("unknown check '" + check + "'");
  cfg.validate();
  return with_ring(cfg.ring, [&](auto t) { return run_typed<typename decltype(t)::type>(check, cfg); });
}

EnumerationResult run_enumeration(const std::string& ring, std::size_t n, const EnumerateOptions& opt,
                                  bool keep_points, bool timing) {
  const auto m = parse_modulus(ring);
  if (!m) {
    validate_ring(ring);
    throw RingRefused("enumeration needs a finite ring (fp:p or zmod:m), got " + ring);
  }
  if (n < 1) throw DomainError("n must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  EnumerationResult out = dispatch_modulus<kMinModulus>(
      *m,
      [&](auto t) {
        using T = typename decltype(t)::type;
        constexpr unsigned M = ring_traits<T>::modulus;
        EnumerationResult r;
        const auto points = enumerate_rank1<M>(n, opt);
        r.count = points.size();
        if (keep_points)
          for (const auto& p : points) r.points.push_back(matrix_to_json(p));
        return r;
      },
      std::make_integer_sequence<unsigned, kMaxEnumerateModulus - kMinModulus + 1>{});
  out.ring = ring;
  out.n = n;
  if (timing) out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::uint64_t image_count(const std::string& ring, std::size_t n) {
  const auto m = parse_modulus(ring);
  if (!m) {
    validate_ring(ring);
    throw RingRefused("image count needs a finite ring (fp:p or zmod:m), got " + ring);
  }
  return dispatch_modulus<kMinModulus>(
      *m, [&](auto t) { return count_by_images<ring_traits<typename decltype(t)::type>::modulus>(n); },
      std::make_integer_sequence<unsigned, kMaxEnumerateModulus - kMinModulus + 1>{});
}

}  // namespace rankone
