#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "rankone/error.hpp"
#include "rankone/rings.hpp"

namespace rankone {

/// Dense square matrix over a ring with involution, row-major.
template <StarRing T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), e_(n * n, T::from_int(0)) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) : Matrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw DomainError("matrix rows must have length n");
      std::size_t j = 0;
      for (const auto& x : row) (*this)(i, j++) = x;
      ++i;
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw DomainError("matrix must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T::from_int(1);
    return m;
  }

  /// Matrix unit E_ij (0-based).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n);
    m(i, j) = T::from_int(1);
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t n() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  const std::vector<T>& entries() const { return e_; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix c(a.n_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix c(a.n_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
    return c;
  }
  Matrix operator-() const {
    Matrix c(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) c.e_[k] = -e_[k];
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    const std::size_t n = a.n_;
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        T s = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < n; ++k) s = s + a(i, k) * b(k, j);
        c(i, j) = s;
      }
    return c;
  }
  /// s * M (scalar on the left)
  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix c(m.n_);
    for (std::size_t k = 0; k < m.e_.size(); ++k) c.e_[k] = s * m.e_[k];
    return c;
  }
  /// M * s (scalar on the right; differs from s * M over noncommutative rings)
  friend Matrix operator*(const Matrix& m, const T& s) {
    Matrix c(m.n_);
    for (std::size_t k = 0; k < m.e_.size(); ++k) c.e_[k] = m.e_[k] * s;
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(e_[0]))>;
    Matrix<U> c(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) c(i, j) = f((*this)(i, j));
    return c;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw DomainError("matrix dimension mismatch");
  }

  std::size_t n_ = 0;
  std::vector<T> e_;
};

/// Conjugate transpose.
template <StarRing T>
Matrix<T> dagger(const Matrix<T>& m) {
  Matrix<T> c(m.n());
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) c(j, i) = involve(m(i, j));
  return c;
}

template <StarRing T>
T trace(const Matrix<T>& m) {
  T s = T::from_int(0);
  for (std::size_t i = 0; i < m.n(); ++i) s = s + m(i, i);
  return s;
}

template <StarRing T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

template <StarRing T>
bool is_zero(const Matrix<T>& m) {
  return std::all_of(m.entries().begin(), m.entries().end(), [](const T& x) { return is_zero(x); });
}

/// Largest entry magnitude.
template <StarRing T>
double max_magnitude(const Matrix<T>& m) {
  double r = 0.0;
  for (const auto& x : m.entries()) r = std::max(r, magnitude(x));
  return r;
}

template <StarRing T>
struct MinorsResult {
  bool vanish = true;
  /// x_jk x_lm - x_jm x_lk for j<l, k<m in lexicographic (j,k,l,m) order.
  std::vector<T> residuals;
};

template <StarRing T>
MinorsResult<T> minors2x2(const Matrix<T>& m) {
  if constexpr (!ring_traits<T>::commutative) {
    throw RingRefused("2x2 minors need a commutative ring, got " + ring_traits<T>::name());
  } else {
    MinorsResult<T> out;
    const std::size_t n = m.n();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = j + 1; l < n; ++l)
          for (std::size_t c = k + 1; c < n; ++c) {
            T r = m(j, k) * m(l, c) - m(j, c) * m(l, k);
            if (!is_zero(r)) out.vanish = false;
            out.residuals.push_back(std::move(r));
          }
    return out;
  }
}

template <StarRing T>
bool minors2x2_vanish(const Matrix<T>& m) {
  return minors2x2(m).vanish;
}

/// Rank of a list of vectors over a field (exact pivoting; machine rings pivot
/// on the largest magnitude and treat entries below tol as zero).
template <StarRing T>
std::size_t row_rank(std::vector<std::vector<T>> rows, double tol = 0.0) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rows.size();
    double best = tol;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      const double m = magnitude(rows[r][c]);
      if (ring_traits<T>::exact) {
        if (m > 0.0 && try_inverse(rows[r][c])) { piv = r; break; }
      } else if (m > best) {
        best = m;
        piv = r;
      }
    }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const T inv = *try_inverse(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (is_zero(rows[r][c])) continue;
      const T f = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Determinant over a commutative field by Gaussian elimination.
template <CommutativeStarRing T>
T determinant(Matrix<T> m) {
  const std::size_t n = m.n();
  T det = T::from_int(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    double best = 0.0;
    for (std::size_t r = c; r < n; ++r) {
      const double mag = magnitude(m(r, c));
      if (ring_traits<T>::exact) {
        if (mag > 0.0) { piv = r; break; }
      } else if (mag > best) {
        best = mag;
        piv = r;
      }
    }
    if (piv == n) return T::from_int(0);
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(c, k), m(piv, k));
      det = -det;
    }
    const auto inv = try_inverse(m(c, c));
    if (!inv) throw RingRefused("determinant needs a field, got " + ring_traits<T>::name());
    det = det * m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const T f = m(r, c) * *inv;
      for (std::size_t k = c; k < n; ++k) m(r, k) = m(r, k) - f * m(c, k);
    }
  }
  return det;
}

/// Entries in row-major order, for rank computations.
template <StarRing T>
std::vector<T> flatten(const Matrix<T>& m) {
  return m.entries();
}

}  // namespace rankone
