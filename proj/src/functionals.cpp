#include "phaseflow/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace phaseflow {

double double_obstacle_W(double x) {
  if (x < 0.0 || x > 1.0) return kInfinity;
  return 0.5 * x * (1.0 - x);
}

double ginzburg_landau(const Graph& g, double eps, const VertexFunction& u) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (u.size() != g.size()) throw std::invalid_argument("vertex function length mismatch");
  if ((u.array() < 0.0).any() || (u.array() > 1.0).any()) return kInfinity;
  double potential = 0.0;
  for (int i = 0; i < g.size(); ++i)
    potential += g.vertex_measure(i) * 0.5 * u[i] * (1.0 - u[i]);
  return dirichlet_energy(g, u) + potential / eps;
}

double mbo_lyapunov_J(const Graph& g, const SpectralDecomposition& dec, double tau,
                      const VertexFunction& u) {
  const VertexFunction diffused = dec.heat_apply(tau, u);
  return vertex_inner(g, VertexFunction::Ones(g.size()) - u, diffused);
}

double lyapunov_H(const Graph& g, const SpectralDecomposition& dec, double eps, double tau,
                  const VertexFunction& u) {
  const double lambda = tau / eps;
  const VertexFunction diffused = dec.heat_apply(tau, u);
  const double quad = vertex_inner(g, u, u) - vertex_inner(g, u, diffused);
  return lambda * vertex_inner(g, u, VertexFunction::Ones(g.size()) - u) + quad;
}

double scaled_lyapunov(const Graph& g, const SpectralDecomposition& dec, double eps,
                       double tau, const VertexFunction& u) {
  return lyapunov_H(g, dec, eps, tau, u) / (2.0 * tau);
}

double limit_functional_f0(const Graph& g, const VertexFunction& u) {
  if (u.size() != g.size()) throw std::invalid_argument("vertex function length mismatch");
  constexpr double quantize = 1e-12;
  VertexFunction snapped = u;
  for (int i = 0; i < u.size(); ++i) {
    if (std::abs(u[i]) <= quantize)
      snapped[i] = 0.0;
    else if (std::abs(u[i] - 1.0) <= quantize)
      snapped[i] = 1.0;
    else
      return kInfinity;
  }
  return 0.5 * total_variation(g, snapped);
}

VertexFunction lyapunov_gradient(const Graph& g, const SpectralDecomposition& dec,
                                 double eps, double tau, const VertexFunction& u) {
  const double lambda = tau / eps;
  const VertexFunction diffused = dec.heat_apply(tau, u);
  return VertexFunction::Constant(g.size(), lambda) - 2.0 * diffused +
         2.0 * (1.0 - lambda) * u;
}

bool stationary_set_check(const Graph& g, const SpectralDecomposition& dec, double eps,
                          double tau, const VertexFunction& u, double tol) {
  return sup_norm(lyapunov_gradient(g, dec, eps, tau, u)) <= tol;
}

bool half_one_global_max_condition(const Graph& g, const SpectralDecomposition& dec,
                                   double eps, double tau) {
  (void)g;
  const double lambda = tau / eps;
  if (lambda > 1.0) return false;
  constexpr double slack = 1e-12;
  for (int k = 0; k < dec.size(); ++k)
    if (std::exp(-tau * dec.eigenvalues()[k]) - (1.0 - lambda) < -slack) return false;
  return true;
}

EnergyReport energy_report(const Graph& g, const SpectralDecomposition& dec, double eps,
                           double tau, const VertexFunction& u) {
  EnergyReport rep;
  rep.gl = ginzburg_landau(g, eps, u);
  rep.h = lyapunov_H(g, dec, eps, tau, u);
  rep.j = mbo_lyapunov_J(g, dec, tau, u);
  rep.tv = total_variation(g, u);
  rep.dirichlet = dirichlet_energy(g, u);
  return rep;
}

}  // namespace phaseflow
