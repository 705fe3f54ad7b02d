#pragma once

// Finite-difference operators on matrix-valued vector fields over M_n(C):
// exterior derivative of Omega, the Nijenhuis tensor of I and the Levi form
// of the potential sqrt(Tr(q^dagger q)).

#include <functional>
#include <vector>

#include "rankone/geometry.hpp"

namespace rankone {

using CMat = Matrix<MachineComplex>;
using VectorField = std::function<CMat(const CMat&)>;

/// p -> [p, [q, a]]; tangent at every idempotent p and equal to a at p = q.
VectorField extend_tangent_field(const CMat& q, const CMat& a);

/// (F(p + h v) - F(p - h v)) / 2h
CMat directional_derivative(const VectorField& F, const CMat& p, const CMat& v, double h);
MachineComplex directional_derivative(const std::function<MachineComplex(const CMat&)>& f, const CMat& p,
                                      const CMat& v, double h);

/// [X, Y](p) = DY(p)[X(p)] - DX(p)[Y(p)]
CMat lie_bracket(const VectorField& X, const VectorField& Y, const CMat& p, double h);

/// |dOmega(A, B, C)| at q for the extended fields of a, b, c.
double dOmega_residual(const CMat& q, const CMat& a, const CMat& b, const CMat& c, double step);

/// I at an arbitrary nearby point, with r(p) = Tr(p^dagger p)^{-1/2}.
CMat I_at(const CMat& p, const CMat& v);

/// The field p -> I_p(X(p)).
VectorField apply_I(const VectorField& X);

/// N(A,B) = [IA,IB] - I[IA,B] - I[A,IB] - [A,B] at q.
CMat nijenhuis(const CMat& q, const CMat& a, const CMat& b, double step);
double nijenhuis_residual(const CMat& q, const CMat& a, const CMat& b, double step);

/// Levi form (1/4)(D_a^2 + D_{ia}^2) phi(q) of phi(q) = sqrt(Tr(q^dagger q)),
/// by second central differences.
double levi_form(const CMat& q, const CMat& a, double step);

struct PotentialFit {
  double constant;       // Levi form / Re h~ at the base point diag(1,0,...)
  double max_deviation;  // max relative |Levi - c Re h~| over the samples
};

struct PotentialSample {
  CMat q;
  CMat a;
};

/// Levi form / Re h~ at diag(1,0,...) along E_12.
double potential_constant(std::size_t n, double step);

/// |Levi - c Re h~| / |c Re h~| at (q, a); 0 when both sides vanish.
double potential_deviation(const CMat& q, const CMat& a, double constant, double step);

/// Fits the constant at diag(1,0,...) along E_12, then compares on samples.
PotentialFit potential_metric_residual(std::size_t n, const std::vector<PotentialSample>& samples, double step);

}  // namespace rankone
