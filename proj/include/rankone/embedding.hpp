#pragma once

// The metric g_x(v, w) = Re(2<v,w>/|x| - <v,x><x,w>/|x|^3) on a punctured
// Hilbert space, its weighted isometric embedding
//   x -> |x|^{1/2} (1, x/|x|, x x^* / |x|^2)   (weights 5/2, 1, 1/2),
// and the induced embedding of rank-1 projections with its image variety.

#include <array>
#include <string>
#include <vector>

#include "rankone/matrix.hpp"

namespace rankone {

/// Coordinates of a Hilbert-space vector. Real and complex spaces use
/// quaternions with vanishing imaginary parts; M_n(C) is flattened row-major
/// with the Hilbert-Schmidt product.
using HVec = std::vector<MachineQuaternion>;

enum class HilbertKind { Real, Complex, Quaternionic, MatrixComplex };

std::string to_string(HilbertKind kind);

struct HilbertPoint {
  HilbertKind kind;
  HVec x;
};

/// <x, y> = sum conj(x_i) y_i
MachineQuaternion inner(const HVec& x, const HVec& y);
double norm(const HVec& x);
HVec operator+(const HVec& x, const HVec& y);
HVec operator-(const HVec& x, const HVec& y);
HVec operator*(double s, const HVec& x);
/// Largest coordinate magnitude.
double max_magnitude(const HVec& x);

double ambient_g(const HVec& x, const HVec& v, const HVec& w);

struct HilbertEmbedding {
  double s;                      // |x|^{1/2}
  HVec u;                        // |x|^{-1/2} x
  Matrix<MachineQuaternion> P;   // |x|^{-3/2} x x^*
};

HilbertEmbedding embed_hilbert(const HVec& x);

struct EmbeddingWeights {
  double s = 2.5;
  double u = 1.0;
  double p = 0.5;
};

struct FdOptions {
  double step = 1e-4;       // scaled by max(1, |x|)
  bool richardson = false;  // combine steps h and h/2
};

/// Weighted inner product of central-difference derivatives of embed_hilbert
/// along v and w.
double pullback_metric(const HVec& x, const HVec& v, const HVec& w, const FdOptions& fd = {},
                       const EmbeddingWeights& weights = {});

/// |pullback_metric - ambient_g|
double pullback_residual(const HVec& x, const HVec& v, const HVec& w, const FdOptions& fd = {},
                         const EmbeddingWeights& weights = {});

/// The alternative real embedding x -> |x|^{1/2}(1, x/|x|) with weights 2, 2;
/// returns |pullback - ambient_g|. Real spaces only.
double real_alt_pullback_residual(const HVec& x, const HVec& v, const HVec& w, const FdOptions& fd = {});

/// Random vector of the given kind; dim counts scalar coordinates (n^2 for
/// MatrixComplex with n = dim).
HVec random_hilbert_vector(Rng& rng, HilbertKind kind, std::size_t dim);

/// Random point with norm drawn uniformly from [min_norm, max_norm].
HVec sample_hilbert_point(Rng& rng, HilbertKind kind, std::size_t dim, double min_norm = 0.5, double max_norm = 2.0);

/// Coordinates of the space's scalar dimension for a kind (n -> n^2 for matrices).
std::size_t coordinate_count(HilbertKind kind, std::size_t dim);

/// Applies a k x k complex matrix to a vector of complex coordinates.
HVec apply(const Matrix<MachineComplex>& U, const HVec& x);

/// Random unitary (Gram-Schmidt of a random complex matrix).
Matrix<MachineComplex> random_unitary(Rng& rng, std::size_t k);

// ---------------------------------------------------------------- projections

HVec flatten_to_hvec(const Matrix<MachineComplex>& m);
Matrix<MachineComplex> hvec_to_matrix(const HVec& v, std::size_t n);

struct EmbeddedTriple {
  double x;
  Matrix<MachineComplex> Q;
  Matrix<MachineComplex> P;  // n^2 x n^2 in the basis E11, E12, ..., Enn
  int sheet;                 // +1 or -1
};

/// sheet * |q|^{1/2} (1, q/|q|, q<q,.>/|q|^2) with |q| = sqrt(Tr(q^dagger q)).
EmbeddedTriple embed_projection(const Matrix<MachineComplex>& q, int sheet = 1, double tol = 1e-10);

inline constexpr std::array<const char*, 7> kVarietyResidualNames = {
    "P(Q)-xQ", "P^2-xP", "xQ^2-Q", "xTrQ-1", "TrP-x", "Tr(Q*Q)-x^2", "sheet"};

/// The seven relations, in the order of kVarietyResidualNames.
std::array<double, 7> variety_residuals(const EmbeddedTriple& t);

/// (x, Q, P) -> x Q, after checking the variety residuals against tol.
Matrix<MachineComplex> variety_to_projection(const EmbeddedTriple& t, double tol = 1e-8);

/// Largest componentwise difference between two triples.
double triple_distance(const EmbeddedTriple& a, const EmbeddedTriple& b);

/// g restricted to projections: ambient_g at q in M_n(C).
double projection_metric(const Matrix<MachineComplex>& q, const Matrix<MachineComplex>& a,
                         const Matrix<MachineComplex>& b);

/// g-length of t -> [[1, t], [0, 0]] on [0, T], by composite Simpson on the
/// finite-difference speed of the embedded curve.
double ray_length(double T, int intervals = 2000, const FdOptions& fd = {});

}  // namespace rankone
