#include "rankone/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace rankone {

namespace {

MachineComplex mc(double x) { return MachineComplex(x); }

double potential_phi(const CMat& q) { return std::sqrt(trace_norm(q).re()); }

}  // namespace

VectorField extend_tangent_field(const CMat& q, const CMat& a) {
  const CMat qa = commutator(q, a);
  return [qa](const CMat& p) { return commutator(p, qa); };
}

CMat directional_derivative(const VectorField& F, const CMat& p, const CMat& v, double h) {
  return mc(1.0 / (2.0 * h)) * (F(p + mc(h) * v) - F(p - mc(h) * v));
}

MachineComplex directional_derivative(const std::function<MachineComplex(const CMat&)>& f, const CMat& p,
                                      const CMat& v, double h) {
  return mc(1.0 / (2.0 * h)) * (f(p + mc(h) * v) - f(p - mc(h) * v));
}

CMat lie_bracket(const VectorField& X, const VectorField& Y, const CMat& p, double h) {
  return directional_derivative(Y, p, X(p), h) - directional_derivative(X, p, Y(p), h);
}

double dOmega_residual(const CMat& q, const CMat& a, const CMat& b, const CMat& c, double step) {
  const auto A = extend_tangent_field(q, a);
  const auto B = extend_tangent_field(q, b);
  const auto C = extend_tangent_field(q, c);
  auto omega_of = [](const VectorField& X, const VectorField& Y) {
    return [X, Y](const CMat& p) { return omega(p, X(p), Y(p)); };
  };
  // dW(A,B,C) = A W(B,C) - B W(A,C) + C W(A,B) - W([A,B],C) + W([A,C],B) - W([B,C],A)
  const MachineComplex d = directional_derivative(omega_of(B, C), q, A(q), step) -
                           directional_derivative(omega_of(A, C), q, B(q), step) +
                           directional_derivative(omega_of(A, B), q, C(q), step) -
                           omega(q, lie_bracket(A, B, q, step), C(q)) +
                           omega(q, lie_bracket(A, C, q, step), B(q)) -
                           omega(q, lie_bracket(B, C, q, step), A(q));
  return magnitude(d);
}

CMat I_at(const CMat& p, const CMat& v) {
  const double r = 1.0 / std::sqrt(trace_norm(p).re());
  return mc(0.5 * r * r * r) * L_unchecked(p, v);
}

VectorField apply_I(const VectorField& X) {
  return [X](const CMat& p) { return I_at(p, X(p)); };
}

CMat nijenhuis(const CMat& q, const CMat& a, const CMat& b, double step) {
  const auto A = extend_tangent_field(q, a);
  const auto B = extend_tangent_field(q, b);
  const auto IA = apply_I(A);
  const auto IB = apply_I(B);
  return lie_bracket(IA, IB, q, step) - I_at(q, lie_bracket(IA, B, q, step)) -
         I_at(q, lie_bracket(A, IB, q, step)) - lie_bracket(A, B, q, step);
}

double nijenhuis_residual(const CMat& q, const CMat& a, const CMat& b, double step) {
  return max_magnitude(nijenhuis(q, a, b, step));
}

double levi_form(const CMat& q, const CMat& a, double step) {
  const CMat ia = MachineComplex(0.0, 1.0) * a;
  const CMat ha = mc(step) * a, hia = mc(step) * ia;
  const double sum = potential_phi(q + ha) + potential_phi(q - ha) + potential_phi(q + hia) +
                     potential_phi(q - hia) - 4.0 * potential_phi(q);
  return 0.25 * sum / (step * step);
}

double potential_constant(std::size_t n, double step) {
  const CMat base = CMat::unit(n, 0, 0);
  const CMat e12 = CMat::unit(n, 0, 1);
  return levi_form(base, e12, step) / h_tilde(cover_lift(base), e12, e12).re();
}

double potential_deviation(const CMat& q, const CMat& a, double constant, double step) {
  const double metric = constant * h_tilde(cover_lift(q), a, a).re();
  const double levi = levi_form(q, a, step);
  if (metric == 0.0 && levi == 0.0) return 0.0;
  return std::fabs(levi - metric) / std::fabs(metric);
}

PotentialFit potential_metric_residual(std::size_t n, const std::vector<PotentialSample>& samples, double step) {
  PotentialFit fit{potential_constant(n, step), 0.0};
  for (const auto& s : samples)
    fit.max_deviation = std::max(fit.max_deviation, potential_deviation(s.q, s.a, fit.constant, step));
  return fit;
}

}  // namespace rankone
