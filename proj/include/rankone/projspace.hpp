#pragma once

// Rank-1 projections: membership through the ideal generators (q^2 = q,
// Tr q = 1, vanishing 2x2 minors), tangent vectors, sampling and exhaustive
// enumeration over finite rings.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "rankone/matrix.hpp"

namespace rankone {

/// Exact rings compare with 0; machine rings with this absolute tolerance.
template <StarRing T>
constexpr double default_tol() {
  return ring_traits<T>::exact ? 0.0 : 1e-10;
}

template <StarRing T>
bool within(const T& x, double tol) {
  return ring_traits<T>::exact ? is_zero(x) : magnitude(x) <= tol;
}

template <StarRing T>
bool within(const Matrix<T>& m, double tol) {
  return ring_traits<T>::exact ? is_zero(m) : max_magnitude(m) <= tol;
}

template <StarRing T>
struct IdealResiduals {
  Matrix<T> idempotency;  // q^2 - q
  T trace;                // Tr q - 1
  std::vector<T> minors;

  bool all_zero(double tol = default_tol<T>()) const {
    if (!within(idempotency, tol) || !within(trace, tol)) return false;
    for (const auto& m : minors)
      if (!within(m, tol)) return false;
    return true;
  }
  double max_residual() const {
    double r = std::max(max_magnitude(idempotency), magnitude(trace));
    for (const auto& m : minors) r = std::max(r, magnitude(m));
    return r;
  }
};

template <StarRing T>
IdealResiduals<T> ideal_residuals(const Matrix<T>& m) {
  if constexpr (!ring_traits<T>::commutative) {
    throw RingRefused("ideal generators need a commutative ring, got " + ring_traits<T>::name());
  } else {
    return {m * m - m, trace(m) - T::from_int(1), minors2x2(m).residuals};
  }
}

template <StarRing T>
bool is_projection(const Matrix<T>& m, double tol = default_tol<T>()) {
  return ideal_residuals(m).all_zero(tol);
}

template <StarRing T>
void require_projection(const Matrix<T>& m, double tol = default_tol<T>()) {
  if (!is_projection(m, tol)) throw NotProjection("matrix is not a rank-1 projection");
}

/// Tr(q x); q x q = rho(q, x) q for a rank-1 projection q.
template <StarRing T>
T rho(const Matrix<T>& q, const Matrix<T>& x) {
  return trace(q * x);
}

/// q x q - Tr(q x) q
template <StarRing T>
Matrix<T> corner_residual(const Matrix<T>& q, const Matrix<T>& x) {
  return q * x * q - rho(q, x) * q;
}

/// q a + a q - a
template <StarRing T>
Matrix<T> tangent_residual(const Matrix<T>& q, const Matrix<T>& a) {
  return q * a + a * q - a;
}

template <StarRing T>
bool is_tangent(const Matrix<T>& q, const Matrix<T>& a, double tol = default_tol<T>()) {
  return within(tangent_residual(q, a), tol);
}

template <StarRing T>
void require_tangent(const Matrix<T>& q, const Matrix<T>& a, double tol = default_tol<T>()) {
  if (!is_tangent(q, a, tol)) throw NotTangent("matrix is not tangent at q (qa + aq != a)");
}

struct SamplingOptions {
  int range = 2;         // exact entries drawn from [-range, range]
  int max_attempts = 10000;
  double min_pivot = 0.25;  // machine rings: reject |u v| below this
};

template <StarRing T>
Matrix<T> random_matrix(Rng& rng, std::size_t n, int range = 2) {
  Matrix<T> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ring_traits<T>::random(rng, range);
  return m;
}

/// q = v (u v)^{-1} u for a column v and row u.
template <StarRing T>
Matrix<T> projection_from(const std::vector<T>& v, const std::vector<T>& u) {
  if (v.size() != u.size()) throw DomainError("row and column lengths differ");
  T uv = T::from_int(0);
  for (std::size_t i = 0; i < v.size(); ++i) uv = uv + u[i] * v[i];
  const auto c = try_inverse(uv);
  if (!c) throw DomainError("u v is not invertible");
  Matrix<T> q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) q(i, j) = v[i] * *c * u[j];
  return q;
}

/// Random rank-1 projection v (u v)^{-1} u. Over noncommutative rings the
/// result is an idempotent with a rank-1 right-module image.
template <StarRing T>
Matrix<T> sample_projection(Rng& rng, std::size_t n, const SamplingOptions& opt = {}) {
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    std::vector<T> v(n), u(n);
    for (auto& x : v) x = ring_traits<T>::random(rng, opt.range);
    for (auto& x : u) x = ring_traits<T>::random(rng, opt.range);
    T uv = T::from_int(0);
    for (std::size_t i = 0; i < n; ++i) uv = uv + u[i] * v[i];
    if (!try_inverse(uv)) continue;
    if (!ring_traits<T>::exact && magnitude(uv) < opt.min_pivot) continue;
    return projection_from(v, u);
  }
  throw SamplingError("no invertible u v within " + std::to_string(opt.max_attempts) + " attempts over " +
                      ring_traits<T>::name());
}

/// [q, x] for a random x; always tangent at an idempotent q.
template <StarRing T>
Matrix<T> sample_tangent(Rng& rng, const Matrix<T>& q, int range = 2) {
  return commutator(q, random_matrix<T>(rng, q.n(), range));
}

/// Dimension of the span of [q, E_ij] over a field.
template <StarRing T>
std::size_t tangent_span_rank(const Matrix<T>& q, double tol = 0.0) {
  std::vector<std::vector<T>> rows;
  for (std::size_t i = 0; i < q.n(); ++i)
    for (std::size_t j = 0; j < q.n(); ++j)
      rows.push_back(flatten(commutator(q, Matrix<T>::unit(q.n(), i, j))));
  return row_rank(std::move(rows), tol);
}

/// A maximal linearly independent subset of {[q, E_ij]} over a field.
template <StarRing T>
std::vector<Matrix<T>> tangent_basis(const Matrix<T>& q, double tol = 0.0) {
  std::vector<Matrix<T>> basis;
  std::vector<std::vector<T>> rows;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < q.n(); ++i)
    for (std::size_t j = 0; j < q.n(); ++j) {
      auto a = commutator(q, Matrix<T>::unit(q.n(), i, j));
      rows.push_back(flatten(a));
      const std::size_t r = row_rank(rows, tol);
      if (r > rank) {
        rank = r;
        basis.push_back(std::move(a));
      } else {
        rows.pop_back();
      }
    }
  return basis;
}

// ---------------------------------------------------------------- enumeration

struct EnumerateOptions {
  std::uint64_t budget = std::uint64_t{1} << 24;  // candidate matrices
  unsigned workers = 1;
};

/// size^(n^2), or 0 if it overflows 64 bits.
inline std::uint64_t candidate_count(std::uint64_t size, std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t k = 0; k < n * n; ++k) {
    if (c > UINT64_MAX / size) return 0;
    c *= size;
  }
  return c;
}

/// Every rank-1 projection in M_n(Z/M), in lexicographic order of entries.
template <unsigned M>
std::vector<Matrix<ModInt<M>>> enumerate_rank1(std::size_t n, const EnumerateOptions& opt = {}) {
  using T = ModInt<M>;
  const std::uint64_t total = candidate_count(M, n);
  if (total == 0 || total > opt.budget) {
    const double est = std::pow(static_cast<double>(M), static_cast<double>(n * n));
    throw BudgetExceeded("enumeration over " + ring_traits<T>::name() + " n=" + std::to_string(n) + " needs " +
                         std::to_string(est) + " candidates, budget is " + std::to_string(opt.budget));
  }
  const std::size_t cells = n * n;
  // candidates with leading entry `lead`, scanned as an odometer
  auto scan = [&](unsigned lead) {
    std::vector<Matrix<T>> out;
    std::vector<unsigned> digits(cells, 0);
    digits[0] = lead;
    Matrix<T> m(n);
    while (true) {
      for (std::size_t k = 0; k < cells; ++k) m(k / n, k % n) = T::from_int(digits[k]);
      if (is_projection(m)) out.push_back(m);
      std::size_t k = cells;
      while (k > 1) {
        --k;
        if (++digits[k] < M) break;
        digits[k] = 0;
        if (k == 1) return out;
      }
      if (cells == 1) return out;
    }
  };
  std::vector<std::vector<Matrix<T>>> parts(M);
  const unsigned workers = std::max(1u, std::min(opt.workers, M));
  if (workers == 1) {
    for (unsigned lead = 0; lead < M; ++lead) parts[lead] = scan(lead);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (unsigned lead = w; lead < M; lead += workers) parts[lead] = scan(lead);
      });
    for (auto& t : pool) t.join();
  }
  std::vector<Matrix<T>> all;
  for (auto& p : parts)
    for (auto& m : p) all.push_back(std::move(m));
  return all;
}

/// Number of distinct products v u over columns v and rows u with u v = 1 in
/// Z/M. Counts rank-1 projections from their images rather than from the
/// ideal generators.
template <unsigned M>
std::uint64_t count_by_images(std::size_t n) {
  using T = ModInt<M>;
  std::uint64_t vecs = 1;
  for (std::size_t k = 0; k < n; ++k) vecs *= M;
  std::vector<std::vector<T>> all(vecs, std::vector<T>(n));
  for (std::uint64_t i = 0; i < vecs; ++i) {
    auto x = i;
    for (std::size_t k = 0; k < n; ++k, x /= M) all[i][k] = T::from_int(static_cast<long>(x % M));
  }
  std::vector<std::vector<unsigned>> seen;
  for (const auto& v : all)
    for (const auto& u : all) {
      T uv = T::from_int(0);
      for (std::size_t k = 0; k < n; ++k) uv = uv + u[k] * v[k];
      if (!(uv == T::from_int(1))) continue;
      std::vector<unsigned> key;
      key.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) key.push_back((v[i] * u[j]).value());
      seen.push_back(std::move(key));
    }
  std::sort(seen.begin(), seen.end());
  return static_cast<std::uint64_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

}  // namespace rankone
