#include "rankone/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "rankone/geometry.hpp"

namespace rankone {

namespace {

using Q = MachineQuaternion;

Q quat(double re) { return Q(MachineComplex(re)); }
Q quat(MachineComplex z) { return Q(z); }

double re(const Q& x) { return x.a().re(); }

/// Re <A, B> for operators stored as matrices.
double hs_real(const Matrix<Q>& a, const Matrix<Q>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) s += re(involve(a.entries()[k]) * b.entries()[k]);
  return s;
}

struct EmbeddingDelta {
  double s;
  HVec u;
  Matrix<Q> P;
};

EmbeddingDelta difference(const HilbertEmbedding& a, const HilbertEmbedding& b, double scale) {
  EmbeddingDelta d{(a.s - b.s) * scale, scale * (a.u - b.u), Matrix<Q>(a.P.n())};
  d.P = (a.P - b.P) * quat(scale);
  return d;
}

EmbeddingDelta combine(const EmbeddingDelta& fine, const EmbeddingDelta& coarse) {
  // (4 D(h/2) - D(h)) / 3
  EmbeddingDelta d{(4.0 * fine.s - coarse.s) / 3.0, (1.0 / 3.0) * ((4.0 * fine.u) - coarse.u), fine.P};
  d.P = (fine.P * quat(4.0) - coarse.P) * quat(1.0 / 3.0);
  return d;
}

EmbeddingDelta central(const HVec& x, const HVec& v, double h) {
  return difference(embed_hilbert(x + h * v), embed_hilbert(x - h * v), 1.0 / (2.0 * h));
}

EmbeddingDelta derivative(const HVec& x, const HVec& v, const FdOptions& fd) {
  const double h = fd.step * std::max(1.0, norm(x));
  if (!fd.richardson) return central(x, v, h);
  return combine(central(x, v, h / 2.0), central(x, v, h));
}

}  // namespace

std::string to_string(HilbertKind kind) {
  switch (kind) {
    case HilbertKind::Real: return "real";
    case HilbertKind::Complex: return "complex";
    case HilbertKind::Quaternionic: return "quaternionic";
    case HilbertKind::MatrixComplex: return "matrix-complex";
  }
  return "unknown";
}

MachineQuaternion inner(const HVec& x, const HVec& y) {
  if (x.size() != y.size()) throw DomainError("inner product of vectors of different lengths");
  Q s = quat(0.0);
  for (std::size_t i = 0; i < x.size(); ++i) s = s + involve(x[i]) * y[i];
  return s;
}

double norm(const HVec& x) { return std::sqrt(std::max(0.0, re(inner(x, x)))); }

HVec operator+(const HVec& x, const HVec& y) {
  HVec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

HVec operator-(const HVec& x, const HVec& y) {
  HVec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

HVec operator*(double s, const HVec& x) {
  HVec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = quat(s) * x[i];
  return z;
}

double max_magnitude(const HVec& x) {
  double m = 0.0;
  for (const auto& c : x) m = std::max(m, std::sqrt(re(involve(c) * c)));
  return m;
}

double ambient_g(const HVec& x, const HVec& v, const HVec& w) {
  const double nx = norm(x);
  if (nx == 0.0) throw DomainError("metric g is undefined at x = 0");
  return re(quat(2.0 / nx) * inner(v, w) - quat(1.0 / (nx * nx * nx)) * inner(v, x) * inner(x, w));
}

HilbertEmbedding embed_hilbert(const HVec& x) {
  const double nx = norm(x);
  if (nx == 0.0) throw DomainError("cannot embed x = 0");
  HilbertEmbedding e{std::sqrt(nx), (1.0 / std::sqrt(nx)) * x, Matrix<Q>(x.size())};
  const Q c = quat(std::pow(nx, -1.5));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) e.P(i, j) = c * x[i] * involve(x[j]);
  return e;
}

double pullback_metric(const HVec& x, const HVec& v, const HVec& w, const FdOptions& fd,
                       const EmbeddingWeights& weights) {
  const auto dv = derivative(x, v, fd);
  const auto dw = derivative(x, w, fd);
  return weights.s * dv.s * dw.s + weights.u * re(inner(dv.u, dw.u)) + weights.p * hs_real(dv.P, dw.P);
}

double pullback_residual(const HVec& x, const HVec& v, const HVec& w, const FdOptions& fd,
                         const EmbeddingWeights& weights) {
  return std::fabs(pullback_metric(x, v, w, fd, weights) - ambient_g(x, v, w));
}

double real_alt_pullback_residual(const HVec& x, const HVec& v, const HVec& w, const FdOptions& fd) {
  for (const auto* vec : {&x, &v, &w})
    for (const auto& c : *vec)
      if (c.a().im() != 0.0 || !is_zero(c.b()))
        throw DomainError("the alternative embedding is defined for real spaces only");
  const double h = fd.step * std::max(1.0, norm(x));
  auto embed = [](const HVec& y) {
    const double ny = norm(y);
    return std::make_pair(std::sqrt(ny), (1.0 / std::sqrt(ny)) * y);
  };
  auto d = [&](const HVec& dir) {
    const auto p = embed(x + h * dir), m = embed(x - h * dir);
    return std::make_pair((p.first - m.first) / (2.0 * h), (1.0 / (2.0 * h)) * (p.second - m.second));
  };
  const auto dv = d(v), dw = d(w);
  const double pulled = 2.0 * dv.first * dw.first + 2.0 * re(inner(dv.second, dw.second));
  return std::fabs(pulled - ambient_g(x, v, w));
}

std::size_t coordinate_count(HilbertKind kind, std::size_t dim) {
  return kind == HilbertKind::MatrixComplex ? dim * dim : dim;
}

HVec random_hilbert_vector(Rng& rng, HilbertKind kind, std::size_t dim) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  HVec v(coordinate_count(kind, dim));
  for (auto& c : v) {
    const double a = d(rng);
    switch (kind) {
      case HilbertKind::Real: c = quat(a); break;
      case HilbertKind::Complex:
      case HilbertKind::MatrixComplex: {
        const double b = d(rng);
        c = quat(MachineComplex(a, b));
        break;
      }
      case HilbertKind::Quaternionic: {
        const double b = d(rng), e = d(rng), f = d(rng);
        c = Q(MachineComplex(a, b), MachineComplex(e, f));
        break;
      }
    }
  }
  return v;
}

HVec sample_hilbert_point(Rng& rng, HilbertKind kind, std::size_t dim, double min_norm, double max_norm) {
  HVec x = random_hilbert_vector(rng, kind, dim);
  while (norm(x) == 0.0) x = random_hilbert_vector(rng, kind, dim);
  std::uniform_real_distribution<double> len(min_norm, max_norm);
  return (len(rng) / norm(x)) * x;
}

HVec apply(const Matrix<MachineComplex>& U, const HVec& x) {
  HVec y(x.size(), quat(0.0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] = y[i] + quat(U(i, j)) * x[j];
  return y;
}

Matrix<MachineComplex> random_unitary(Rng& rng, std::size_t k) {
  auto m = random_matrix<MachineComplex>(rng, k);
  // Gram-Schmidt on columns
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      std::complex<double> dot{};
      for (std::size_t i = 0; i < k; ++i) dot += std::conj(m(i, p).z) * m(i, c).z;
      for (std::size_t i = 0; i < k; ++i) m(i, c) = MachineComplex(m(i, c).z - dot * m(i, p).z);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < k; ++i) nrm += std::norm(m(i, c).z);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-8) throw SamplingError("degenerate matrix while building a unitary");
    for (std::size_t i = 0; i < k; ++i) m(i, c) = MachineComplex(m(i, c).z / nrm);
  }
  return m;
}

HVec flatten_to_hvec(const Matrix<MachineComplex>& m) {
  HVec v;
  v.reserve(m.entries().size());
  for (const auto& z : m.entries()) v.push_back(quat(z));
  return v;
}

Matrix<MachineComplex> hvec_to_matrix(const HVec& v, std::size_t n) {
  if (v.size() != n * n) throw DomainError("vector length is not n^2");
  Matrix<MachineComplex> m(n);
  for (std::size_t k = 0; k < v.size(); ++k) m(k / n, k % n) = v[k].a();
  return m;
}

EmbeddedTriple embed_projection(const Matrix<MachineComplex>& q, int sheet, double tol) {
  require_projection(q, tol);
  if (sheet != 1 && sheet != -1) throw DomainError("sheet must be +1 or -1");
  const double nq = std::sqrt(trace_norm(q).re());
  const double sg = sheet;
  const std::size_t n = q.n();
  EmbeddedTriple t{sg * std::sqrt(nq), MachineComplex(sg / std::sqrt(nq)) * q, Matrix<MachineComplex>(n * n), sheet};
  const double c = sg * std::pow(nq, -1.5);
  for (std::size_t a = 0; a < n * n; ++a)
    for (std::size_t b = 0; b < n * n; ++b)
      t.P(a, b) = MachineComplex(c * q.entries()[a].z * std::conj(q.entries()[b].z));
  return t;
}

std::array<double, 7> variety_residuals(const EmbeddedTriple& t) {
  const std::size_t n = t.Q.n();
  const MachineComplex x(t.x);
  // P applied to Q as a vector of M_n(C)
  Matrix<MachineComplex> PQ(n);
  for (std::size_t a = 0; a < n * n; ++a) {
    MachineComplex s(0.0);
    for (std::size_t b = 0; b < n * n; ++b) s = s + t.P(a, b) * t.Q.entries()[b];
    PQ(a / n, a % n) = s;
  }
  const double tq = trace(dagger(t.Q) * t.Q).re();
  return {max_magnitude(PQ - x * t.Q),
          max_magnitude(t.P * t.P - x * t.P),
          max_magnitude(x * (t.Q * t.Q) - t.Q),
          magnitude(x * trace(t.Q) - MachineComplex(1.0)),
          magnitude(trace(t.P) - x),
          std::fabs(tq - t.x * t.x),
          std::max(0.0, -static_cast<double>(t.sheet) * t.x)};
}

Matrix<MachineComplex> variety_to_projection(const EmbeddedTriple& t, double tol) {
  const auto res = variety_residuals(t);
  for (std::size_t k = 0; k < res.size(); ++k)
    if (!(res[k] <= tol))
      throw DomainError(std::string("triple is off the variety: residual ") + kVarietyResidualNames[k] + " = " +
                        std::to_string(res[k]));
  return MachineComplex(t.x) * t.Q;
}

double triple_distance(const EmbeddedTriple& a, const EmbeddedTriple& b) {
  return std::max({std::fabs(a.x - b.x), max_magnitude(a.Q - b.Q), max_magnitude(a.P - b.P)});
}

double projection_metric(const Matrix<MachineComplex>& q, const Matrix<MachineComplex>& a,
                         const Matrix<MachineComplex>& b) {
  return ambient_g(flatten_to_hvec(q), flatten_to_hvec(a), flatten_to_hvec(b));
}

double ray_length(double T, int intervals, const FdOptions& fd) {
  if (intervals % 2 != 0) ++intervals;
  const HVec dir = flatten_to_hvec(Matrix<MachineComplex>{{0.0, 1.0}, {0.0, 0.0}});
  auto speed = [&](double t) {
    const HVec x = flatten_to_hvec(Matrix<MachineComplex>{{1.0, t}, {0.0, 0.0}});
    return std::sqrt(std::max(0.0, pullback_metric(x, dir, dir, fd)));
  };
  const double h = T / intervals;
  double s = speed(0.0) + speed(T);
  for (int k = 1; k < intervals; ++k) s += (k % 2 ? 4.0 : 2.0) * speed(k * h);
  return s * h / 3.0;
}

}  // namespace rankone
