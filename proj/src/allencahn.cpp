#include "phaseflow/allencahn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "phaseflow/rng.hpp"
#include "phaseflow/semidiscrete.hpp"

namespace phaseflow {

VertexFunction beta_explicit(const Graph& g, double eps, const VertexFunction& u,
                             double snap_tol) {
  if (u.size() != g.size()) throw std::invalid_argument("vertex function length mismatch");
  const VertexFunction lap = laplacian(g, u);
  VertexFunction beta = VertexFunction::Zero(g.size());
  for (int i = 0; i < g.size(); ++i) {
    if (u[i] <= snap_tol)
      beta[i] = 0.5 + eps * lap[i];
    else if (u[i] >= 1.0 - snap_tol)
      beta[i] = -0.5 + eps * lap[i];
  }
  return beta;
}

double w_nu(double nu, double x) {
  if (x < 0.0) return 0.25 * x * x / nu + 0.5 * x;
  if (x <= 1.0) return 0.5 * x * (1.0 - x);
  return 0.25 * (x - 1.0) * (x - 1.0) / nu - 0.5 * (x - 1.0);
}

double w_nu_prime(double nu, double x) {
  if (x < 0.0) return 0.5 * x / nu + 0.5;
  if (x <= 1.0) return 0.5 - x;
  return 0.5 * (x - 1.0) / nu - 0.5;
}

Trajectory regularized_flow(const Graph& g, const SpectralDecomposition& dec, double eps,
                            double nu, const VertexFunction& u0, double t_end, double dt) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be positive");
  if (!(nu > 0.0 && nu <= 1.0)) throw std::invalid_argument("nu must lie in (0,1]");
  if ((u0.array() < 0.0).any() || (u0.array() > 1.0).any())
    throw std::invalid_argument("initial state must lie in [0,1]^V");
  if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
  if (dt <= 0.0) dt = std::min(0.1 * eps * nu, 0.01 / dec.operator_norm());
  const int n_steps = static_cast<int>(std::ceil(t_end / dt - 1e-12));
  dt = t_end / n_steps;

  auto rhs = [&](const VertexFunction& u) {
    VertexFunction out = -laplacian(g, u);
    for (int i = 0; i < u.size(); ++i) out[i] -= w_nu_prime(nu, u[i]) / eps;
    return out;
  };
  auto reaction = [&](const VertexFunction& u) {
    VertexFunction beta(u.size());
    for (int i = 0; i < u.size(); ++i) beta[i] = 0.5 - u[i] - w_nu_prime(nu, u[i]);
    return beta;
  };

  Trajectory traj;
  traj.scheme_tag = "regularized-nu";
  traj.times.reserve(n_steps + 1);
  traj.states.reserve(n_steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(u0);
  traj.betas.push_back(reaction(u0));
  VertexFunction u = u0;
  const double lo = -nu - 1e-6, hi = 1.0 + nu + 1e-6;
  for (int k = 1; k <= n_steps; ++k) {
    const VertexFunction k1 = rhs(u);
    const VertexFunction k2 = rhs(u + 0.5 * dt * k1);
    const VertexFunction k3 = rhs(u + 0.5 * dt * k2);
    const VertexFunction k4 = rhs(u + dt * k3);
    u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if ((u.array() < lo).any() || (u.array() > hi).any())
      throw std::runtime_error("regularized flow step rejected: state left [-nu,1+nu]");
    traj.times.push_back(k * dt);
    traj.states.push_back(u);
    traj.betas.push_back(reaction(u));
  }
  return traj;
}

Trajectory ac_reference(const Graph& g, const SpectralDecomposition& dec, double eps,
                        const VertexFunction& u0, const std::vector<double>& t_grid,
                        double tau_ref) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be positive");
  if (t_grid.empty()) throw std::invalid_argument("t_grid must be non-empty");
  if (!std::is_sorted(t_grid.begin(), t_grid.end()) || t_grid.front() < 0.0)
    throw std::invalid_argument("t_grid must be sorted and nonnegative");
  if (tau_ref <= 0.0) tau_ref = eps / 1024.0;
  const SchemeParams params(eps, tau_ref);

  std::vector<int> sample_steps;
  for (double t : t_grid) {
    const int m = static_cast<int>(std::ceil(t / tau_ref - 1e-12));
    if (sample_steps.empty() || m > sample_steps.back()) sample_steps.push_back(m);
  }

  Trajectory traj;
  traj.scheme_tag = "semi-discrete reference";
  VertexFunction u = u0;
  VertexFunction beta = VertexFunction::Zero(g.size());
  std::size_t next = 0;
  const int m_max = sample_steps.back();
  // step 0 gets the t -> 0+ reaction, filled in after the first step
  if (sample_steps[next] == 0) {
    traj.times.push_back(0.0);
    traj.states.push_back(u0);
    traj.betas.push_back(beta);
    ++next;
  }
  for (int m = 1; m <= m_max && next < sample_steps.size(); ++m) {
    const SchemeState s = sd_step(g, dec, params, u);
    u = s.u;
    beta = s.beta;
    if (m == 1 && !traj.betas.empty()) traj.betas[0] = beta;
    if (m == sample_steps[next]) {
      traj.times.push_back(m * tau_ref);
      traj.states.push_back(u);
      traj.betas.push_back(beta);
      ++next;
    }
  }
  return traj;
}

VertexFunction interior_closed_form(const Graph& g, const SpectralDecomposition& dec,
                                    double eps, const VertexFunction& u0, double t) {
  const VertexFunction half = constant_vector(g, 0.5);
  return half + dec.drift_apply(eps, t, u0 - half);
}

double freeze_time_alpha(double eps, double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::invalid_argument("freeze_time_alpha requires alpha in (0,1/2)");
  return -eps * std::log1p(-2.0 * alpha);
}

double integral_form_residual(const Graph& g, const SpectralDecomposition& dec, double eps,
                              const Trajectory& traj) {
  const int m = traj.size();
  if (m == 0) throw std::invalid_argument("empty trajectory");
  const VertexFunction half = constant_vector(g, 0.5);
  const VertexFunction& u0 = traj.states.front();
  const double t0 = traj.times.front();
  double worst = 0.0;
  for (int k = 0; k < m; ++k) {
    const double t = traj.times[k];
    VertexFunction integral = VertexFunction::Zero(g.size());
    VertexFunction prev = dec.drift_apply(eps, t - t0, traj.betas[0]);
    for (int j = 1; j <= k; ++j) {
      VertexFunction cur = dec.drift_apply(eps, t - traj.times[j], traj.betas[j]);
      integral += 0.5 * (traj.times[j] - traj.times[j - 1]) * (prev + cur);
      prev = std::move(cur);
    }
    const VertexFunction rhs =
        half + dec.drift_apply(eps, t - t0, u0 - half) + integral / eps;
    worst = std::max(worst, vertex_norm(g, traj.states[k] - rhs));
  }
  return worst;
}

double weak_form_residual(const Graph& g, double eps, const Trajectory& traj,
                          int eta_samples, std::uint64_t seed) {
  const int m = traj.size();
  if (m < 3) throw std::invalid_argument("trajectory too short for central differences");
  Rng rng(seed);
  const int n = g.size();
  double worst = kInfinity;
  auto evaluate = [&](const VertexFunction& base, const VertexFunction& u,
                      const EdgeFunction& grad_u, double grad_uu,
                      const VertexFunction& eta) {
    const double val = vertex_inner(g, base, eta - u) +
                       eps * (edge_inner(g, grad_u, gradient(g, eta)) - grad_uu);
    worst = std::min(worst, val);
  };
  // The inequality is an a.e. statement; samples where the obstacle contact
  // pattern changes sit at kinks of t -> u(t), where the central difference
  // does not approximate either one-sided derivative. Skip those.
  auto contact = [](double x) { return x <= 1e-9 ? -1 : (x >= 1.0 - 1e-9 ? 1 : 0); };
  auto same_contacts = [&](int a, int b) {
    for (int i = 0; i < traj.states[a].size(); ++i)
      if (contact(traj.states[a][i]) != contact(traj.states[b][i])) return false;
    return true;
  };
  for (int k = 1; k + 1 < m; ++k) {
    if (!same_contacts(k - 1, k) || !same_contacts(k, k + 1)) continue;
    const VertexFunction& u = traj.states[k];
    // three-point derivative, second order also on uneven spacing
    const double hp = traj.times[k + 1] - traj.times[k];
    const double hm = traj.times[k] - traj.times[k - 1];
    const VertexFunction dudt =
        (hm * hm * traj.states[k + 1] - hp * hp * traj.states[k - 1] +
         (hp * hp - hm * hm) * traj.states[k]) /
        (hp * hm * (hp + hm));
    const VertexFunction base = eps * dudt - u + constant_vector(g, 0.5);
    const EdgeFunction grad_u = gradient(g, u);
    const double grad_uu = edge_inner(g, grad_u, grad_u);
    evaluate(base, u, grad_u, grad_uu, u);
    for (int i = 0; i < n; ++i) {
      VertexFunction eta = u;
      eta[i] = 0.0;
      evaluate(base, u, grad_u, grad_uu, eta);
      eta[i] = 1.0;
      evaluate(base, u, grad_u, grad_uu, eta);
    }
    for (int s = 0; s < eta_samples; ++s) {
      VertexFunction eta(n);
      for (int i = 0; i < n; ++i) eta[i] = rng.uniform();
      evaluate(base, u, grad_u, grad_uu, eta);
    }
  }
  return worst;
}

bool gl_decrease_check(const Graph& g, const Trajectory& traj, double eps, double tol) {
  const int m = traj.size();
  std::vector<double> gl(m);
  for (int k = 0; k < m; ++k) gl[k] = ginzburg_landau(g, eps, traj.states[k]);
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l) {
      const double gap = vertex_inner(g, traj.states[k] - traj.states[l],
                                      traj.states[k] - traj.states[l]) /
                         (2.0 * (traj.times[l] - traj.times[k]));
      if (gl[k] - gl[l] < gap - tol) return false;
    }
  return true;
}

bool holder_half_check(const Graph& g, const Trajectory& traj, double eps, double tol) {
  const double bound_scale = std::sqrt(2.0 * ginzburg_landau(g, eps, traj.states.front()));
  const int m = traj.size();
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l) {
      const double lhs = vertex_norm(g, traj.states[k] - traj.states[l]);
      if (lhs > std::sqrt(traj.times[l] - traj.times[k]) * bound_scale + tol) return false;
    }
  return true;
}

bool wellposed_bound_check(const Graph& g, const SpectralDecomposition& dec, double eps,
                           const VertexFunction& u0, const VertexFunction& v0,
                           const std::vector<double>& t_grid, double tau_ref) {
  const Trajectory tu = ac_reference(g, dec, eps, u0, t_grid, tau_ref);
  const Trajectory tv = ac_reference(g, dec, eps, v0, t_grid, tau_ref);
  const double d0 = vertex_norm(g, u0 - v0);
  for (int k = 0; k < tu.size(); ++k) {
    const double bound = std::exp(tu.times[k] / eps) * d0 * (1.0 + 1e-8);
    if (vertex_norm(g, tu.states[k] - tv.states[k]) > bound) return false;
  }
  return true;
}

}  // namespace phaseflow
