#include "phaseflow/comparison.hpp"

#include <cmath>
#include <stdexcept>

#include "phaseflow/allencahn.hpp"
#include "phaseflow/functionals.hpp"
#include "phaseflow/rng.hpp"
#include "phaseflow/semidiscrete.hpp"

namespace phaseflow {

bool positive_part_inequality(const Graph& g, const VertexFunction& z) {
  const VertexFunction zp = z.cwiseMax(0.0);
  const EdgeFunction grad_z = gradient(g, z);
  const EdgeFunction grad_zp = gradient(g, zp);
  const double lhs = edge_inner(g, grad_zp, grad_zp);
  const double rhs = edge_inner(g, grad_z, grad_zp);
  return lhs <= rhs + 1e-12 * std::max(1.0, std::abs(rhs));
}

bool cesaro_identity_check(const Graph& g, const std::vector<VertexFunction>& vs) {
  if (vs.empty()) throw std::invalid_argument("need at least one vector");
  const double n = static_cast<double>(vs.size());
  double sum_sq = 0.0;
  VertexFunction total = VertexFunction::Zero(vs.front().size());
  double pair_sq = 0.0;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    sum_sq += vertex_inner(g, vs[a], vs[a]);
    total += vs[a];
    for (std::size_t b = 0; b < a; ++b)
      pair_sq += vertex_inner(g, vs[a] - vs[b], vs[a] - vs[b]);
  }
  const double rhs = vertex_inner(g, total, total) / n + pair_sq / n;
  return std::abs(sum_sq - rhs) <= 1e-9 * std::max(1.0, std::abs(sum_sq));
}

bool cp2_experiment(const Graph& g, const SpectralDecomposition& dec, double eps,
                    const VertexFunction& u0, const VertexFunction& v0, double T,
                    double tau_ref) {
  if (tau_ref <= 0.0) tau_ref = eps / 1024.0;
  const SchemeParams params(eps, tau_ref);
  const int n_steps = static_cast<int>(std::ceil(T / tau_ref - 1e-12));
  VertexFunction u = u0, v = v0;
  if (((v - u).array() > 1e-8).any()) return false;
  for (int k = 0; k < n_steps; ++k) {
    u = sd_step(g, dec, params, u).u;
    v = sd_step(g, dec, params, v).u;
    if (((v - u).array() > 1e-8).any()) return false;
  }
  return true;
}

std::vector<VertexFunction> integrate_subsolution(const Graph& g,
                                                  const SpectralDecomposition& dec,
                                                  double eps, const VertexFunction& w0,
                                                  const std::vector<VertexFunction>& forcing,
                                                  double tau) {
  if (w0.size() != g.size()) throw std::invalid_argument("vertex function length mismatch");
  // w' = A w - (1/eps)(1/2 + g_k) on each window, A = (1/eps) I - Lap;
  // w_{k+1} = e^{tau A} w_k - (1/eps) Phi(1/2 + g_k), Phi = int_0^tau e^{sA} ds.
  auto phi = [eps, tau](double lam) {
    const double mu = 1.0 / eps - lam;
    if (std::abs(mu) < 1e-12) return tau * (1.0 + 0.5 * tau * mu);
    return (std::exp(tau * mu) - 1.0) / mu;
  };
  std::vector<VertexFunction> states;
  states.reserve(forcing.size() + 1);
  states.push_back(w0);
  VertexFunction w = w0;
  const VertexFunction half = constant_vector(g, 0.5);
  for (const VertexFunction& gk : forcing) {
    w = dec.drift_apply(eps, tau, w) - dec.apply_filter(phi, half + gk) / eps;
    states.push_back(w);
  }
  return states;
}

Cp1Result cp1_experiment(const Graph& g, const SpectralDecomposition& dec, double eps,
                         const VertexFunction& u0, const VertexFunction& w0, double T,
                         std::uint64_t seed, double tau_ref) {
  if (tau_ref <= 0.0) tau_ref = eps / 1024.0;
  const int n_steps = static_cast<int>(std::ceil(T / tau_ref - 1e-12));
  Rng rng(seed);
  std::vector<VertexFunction> forcing(n_steps);
  for (auto& gk : forcing) {
    gk.resize(g.size());
    for (int i = 0; i < g.size(); ++i) gk[i] = rng.uniform();
  }
  const std::vector<VertexFunction> w = integrate_subsolution(g, dec, eps, w0, forcing, tau_ref);

  Cp1Result result;
  result.admissible = true;
  for (const VertexFunction& wk : w)
    if ((wk.array() > 1.0 + 1e-12).any()) {
      result.admissible = false;
      return result;
    }

  const SchemeParams params(eps, tau_ref);
  VertexFunction u = u0;
  result.passed = !((w[0] - u).array() > 1e-8).any();
  for (int k = 1; k <= n_steps && result.passed; ++k) {
    u = sd_step(g, dec, params, u).u;
    if (((w[k] - u).array() > 1e-8).any()) result.passed = false;
  }
  return result;
}

ConvergenceTable convergence_order_experiment(const Graph& g,
                                              const SpectralDecomposition& dec, double eps,
                                              const VertexFunction& u0, double t,
                                              const std::vector<double>& taus,
                                              double tau_ref) {
  if (taus.empty()) throw std::invalid_argument("need at least one tau");
  double tau_min = taus.front();
  for (double tau : taus) tau_min = std::min(tau_min, tau);
  if (tau_ref <= 0.0) tau_ref = tau_min / 64.0;

  const Trajectory ref = ac_reference(g, dec, eps, u0, {t}, tau_ref);
  const VertexFunction& u_ref = ref.states.back();

  ConvergenceTable table;
  for (double tau : taus) {
    const SchemeParams params(eps, tau);
    const int m = static_cast<int>(std::ceil(t / tau - 1e-12));
    VertexFunction u = u0;
    for (int k = 0; k < m; ++k) u = sd_step(g, dec, params, u).u;
    table.rows.push_back({tau, vertex_norm(g, u - u_ref)});
  }

  table.all_zero = true;
  table.monotone = true;
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    if (table.rows[k].error != 0.0) table.all_zero = false;
    if (k > 0 && table.rows[k].tau < table.rows[k - 1].tau &&
        table.rows[k].error > table.rows[k - 1].error * (1.0 + 1e-9))
      table.monotone = false;
  }
  if (!table.all_zero) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(table.rows.size());
    for (const auto& row : table.rows) {
      const double x = std::log(row.tau), y = std::log(std::max(row.error, 1e-300));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    table.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return table;
}

std::vector<GammaRow> gamma_convergence_experiment(const Graph& g,
                                                   const std::vector<double>& eps_list,
                                                   int grid_k) {
  const int n = g.size();
  if (grid_k < 1) throw std::invalid_argument("grid_k must be >= 1");
  double grid_points = std::pow(grid_k + 1.0, n);
  if (grid_points > double(1 << 21))
    throw std::invalid_argument("grid too large for exhaustive search");

  // f0 minimiser set over binary states
  std::vector<VertexFunction> f0_minimisers;
  double f0_min = kInfinity;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexFunction u = VertexFunction::Zero(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) u[i] = 1.0;
    const double val = 0.5 * total_variation(g, u);
    if (val < f0_min - 1e-12) {
      f0_min = val;
      f0_minimisers.clear();
    }
    if (val <= f0_min + 1e-12) f0_minimisers.push_back(u);
  }

  const SpectralDecomposition dec(g);
  const double norm_sq = dec.operator_norm() * dec.operator_norm();
  const double measure = g.total_measure();

  std::vector<GammaRow> rows;
  for (double eps : eps_list) {
    GammaRow row;
    row.eps = eps;
    row.min_energy = kInfinity;
    row.scaled_h_bound_ok = true;
    VertexFunction best = VertexFunction::Zero(n);
    VertexFunction u = VertexFunction::Zero(n);
    std::vector<int> digits(n, 0);
    bool done = false;
    while (!done) {
      for (int i = 0; i < n; ++i) u[i] = double(digits[i]) / grid_k;
      const double gl = ginzburg_landau(g, eps, u);
      if (gl < row.min_energy) {
        row.min_energy = gl;
        best = u;
      }
      for (double tau : {eps, 0.5 * eps}) {
        const double gap = std::abs(scaled_lyapunov(g, dec, eps, tau, u) - gl);
        if (gap > 0.25 * tau * norm_sq * measure + 1e-10) row.scaled_h_bound_ok = false;
      }
      int pos = 0;
      while (pos < n && ++digits[pos] > grid_k) digits[pos++] = 0;
      done = pos == n;
    }
    row.minimizer_distance = kInfinity;
    for (const auto& b : f0_minimisers)
      row.minimizer_distance = std::min(row.minimizer_distance, sup_norm(best - b));
    rows.push_back(row);
  }
  return rows;
}

std::vector<BetaConsistencyRow> beta_consistency_experiment(
    const Graph& g, const SpectralDecomposition& dec, double eps, const VertexFunction& u0,
    double t, const std::vector<double>& taus) {
  const Trajectory ref = ac_reference(g, dec, eps, u0, {t});
  const VertexFunction& beta_ref = ref.betas.back();

  std::vector<BetaConsistencyRow> rows;
  VertexFunction cesaro = VertexFunction::Zero(g.size());
  int count = 0;
  for (double tau : taus) {
    const SchemeParams params(eps, tau);
    const int m = std::max(1, static_cast<int>(std::ceil(t / tau - 1e-12)));
    VertexFunction u = u0;
    SchemeState state;
    for (int k = 0; k < m; ++k) {
      state = sd_step(g, dec, params, u);
      u = state.u;
    }
    cesaro += state.beta;
    ++count;
    rows.push_back({count, tau, vertex_norm(g, cesaro / count - beta_ref)});
  }
  return rows;
}

}  // namespace phaseflow
