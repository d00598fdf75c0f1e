#include "phaseflow/semidiscrete.hpp"

#include <cmath>
#include <stdexcept>

namespace phaseflow {

SchemeParams::SchemeParams(double eps_, double tau_) : epsilon(eps_), tau(tau_) {
  // epsilon < 0 encodes the formal lambda < 0 regime; epsilon = +infinity
  // encodes lambda = 0.
  if (std::isnan(epsilon) || epsilon == 0.0)
    throw std::invalid_argument("epsilon must be nonzero");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("tau must be positive");
}

SchemeParams SchemeParams::from_lambda(double tau_, double lambda_) {
  if (lambda_ == 0.0) return SchemeParams(kInfinity, tau_);
  return SchemeParams(tau_ / lambda_, tau_);
}

SchemeParams::Regime SchemeParams::regime() const {
  const double lam = lambda();
  if (lam < 0.0) return Regime::Negative;
  if (lam < 1.0) return Regime::SubUnit;
  if (lam == 1.0) return Regime::Mbo;
  return Regime::SuperUnit;
}

double rho_lambda_scalar(double lambda, double v) {
  if (v < 0.5 * lambda) return 0.0;
  if (v < 1.0 - 0.5 * lambda) return 0.5 + (v - 0.5) / (1.0 - lambda);
  return 1.0;
}

VertexFunction rho_lambda(double lambda, const VertexFunction& v) {
  if (!(lambda >= 0.0 && lambda < 1.0))
    throw std::invalid_argument("rho_lambda requires lambda in [0,1)");
  VertexFunction out(v.size());
  for (int i = 0; i < v.size(); ++i) out[i] = rho_lambda_scalar(lambda, v[i]);
  return out;
}

double beta_from_diffused_scalar(double lambda, double v) {
  if (v < 0.5 * lambda) return 0.5 - v / lambda;
  if (v < 1.0 - 0.5 * lambda) return 0.0;
  return -0.5 + (1.0 - v) / lambda;
}

VertexFunction beta_from_diffused(double lambda, const VertexFunction& v) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("beta_from_diffused requires lambda in (0,1)");
  VertexFunction out(v.size());
  for (int i = 0; i < v.size(); ++i) out[i] = beta_from_diffused_scalar(lambda, v[i]);
  return out;
}

SchemeState sd_step(const Graph& g, const SpectralDecomposition& dec,
                    const SchemeParams& params, const VertexFunction& u) {
  if (u.size() != g.size()) throw std::invalid_argument("vertex function length mismatch");
  const double lam = params.lambda();
  if (!(lam >= 0.0 && lam <= 1.0))
    throw std::invalid_argument("sd_step requires lambda in [0,1]");
  const VertexFunction v = dec.heat_apply(params.tau, u);
  SchemeState next;
  if (lam == 1.0) {
    next.u.resize(v.size());
    for (int i = 0; i < v.size(); ++i) next.u[i] = v[i] >= 0.5 ? 1.0 : 0.0;
    next.beta = VertexFunction::Constant(v.size(), 0.5) - v;
  } else if (lam == 0.0) {
    next.u = rho_lambda(0.0, v);
    next.beta = VertexFunction::Zero(v.size());
  } else {
    next.u = rho_lambda(lam, v);
    next.beta = beta_from_diffused(lam, v);
  }
  return next;
}

VertexFunction mbo_step(const Graph& g, const SpectralDecomposition& dec, double tau,
                        const VertexFunction& u_binary) {
  if (u_binary.size() != g.size())
    throw std::invalid_argument("vertex function length mismatch");
  for (int i = 0; i < u_binary.size(); ++i)
    if (u_binary[i] != 0.0 && u_binary[i] != 1.0)
      throw std::invalid_argument("mbo_step requires a binary state");
  const VertexFunction v = dec.heat_apply(tau, u_binary);
  VertexFunction out(v.size());
  for (int i = 0; i < v.size(); ++i) out[i] = v[i] >= 0.5 ? 1.0 : 0.0;
  return out;
}

Trajectory sd_run(const Graph& g, const SpectralDecomposition& dec,
                  const SchemeParams& params, const VertexFunction& u0, int n_steps,
                  double fixed_point_tol) {
  if ((u0.array() < 0.0).any() || (u0.array() > 1.0).any())
    throw std::invalid_argument("initial state must lie in [0,1]^V");
  Trajectory traj;
  traj.scheme_tag = "semi-discrete";
  traj.times.push_back(0.0);
  traj.states.push_back(u0);
  traj.betas.push_back(VertexFunction::Zero(g.size()));
  traj.energies.push_back(energy_report(g, dec, params.epsilon, params.tau, u0));
  VertexFunction u = u0;
  for (int n = 1; n <= n_steps; ++n) {
    SchemeState next = sd_step(g, dec, params, u);
    traj.times.push_back(n * params.tau);
    traj.states.push_back(next.u);
    traj.betas.push_back(next.beta);
    traj.energies.push_back(energy_report(g, dec, params.epsilon, params.tau, next.u));
    const double delta = sup_norm(next.u - u);
    u = next.u;
    if (delta <= fixed_point_tol) {
      traj.reached_fixed_point = true;
      traj.fixed_point_step = n;
      break;
    }
  }
  return traj;
}

VertexFunction step_lambda_gt1(const Graph& g, const SpectralDecomposition& dec,
                               const SchemeParams& params, const VertexFunction& u) {
  if (!(params.lambda() > 1.0))
    throw std::invalid_argument("step_lambda_gt1 requires lambda > 1");
  const VertexFunction v = dec.heat_apply(params.tau, u);
  VertexFunction out(g.size());
  for (int i = 0; i < v.size(); ++i) out[i] = v[i] >= 0.5 ? 1.0 : 0.0;
  return out;
}

SchemeState step_lambda_neg(const Graph& g, const SpectralDecomposition& dec,
                            const SchemeParams& params, const VertexFunction& u) {
  const double lam = params.lambda();
  if (!(lam < 0.0)) throw std::invalid_argument("step_lambda_neg requires lambda < 0");
  const VertexFunction v = dec.heat_apply(params.tau, u);
  SchemeState next;
  next.u = (v.array() - 0.5 * lam) / (1.0 - lam);
  next.beta = VertexFunction::Zero(g.size());
  return next;
}

PinningBounds pinning_bounds(const Graph& g, const SpectralDecomposition& dec,
                             const std::vector<int>& s, double lambda) {
  const VertexFunction chi = indicator(g, s);
  const double mass = vertex_inner(g, chi, VertexFunction::Ones(g.size()));
  PinningBounds b;
  if (mass == 0.0) {
    b.bound1 = kInfinity;  // chi = 0 is a fixed point outright
  } else {
    b.bound1 = std::log1p(0.5 * lambda * std::sqrt(g.min_vertex_measure() / mass)) /
               dec.operator_norm();
  }
  const double lap_inf = sup_norm(laplacian(g, chi));
  b.bound2 = lap_inf == 0.0 ? kInfinity : 0.5 * lambda / lap_inf;
  return b;
}

bool sd_lipschitz_check(const Graph& g, const SpectralDecomposition& dec,
                        const SchemeParams& params, const VertexFunction& u0,
                        const VertexFunction& v0, int n) {
  const double lam = params.lambda();
  if (!(lam >= 0.0 && lam < 1.0))
    throw std::invalid_argument("sd_lipschitz_check requires lambda in [0,1)");
  const double d0 = vertex_norm(g, u0 - v0);
  VertexFunction u = u0, v = v0;
  double factor = 1.0;
  for (int k = 1; k <= n; ++k) {
    u = sd_step(g, dec, params, u).u;
    v = sd_step(g, dec, params, v).u;
    factor /= 1.0 - lam;
    if (vertex_norm(g, u - v) > factor * d0 * (1.0 + 1e-10)) return false;
  }
  return true;
}

}  // namespace phaseflow
