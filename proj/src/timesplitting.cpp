#include "phaseflow/timesplitting.hpp"

#include <cmath>
#include <stdexcept>

#include "phaseflow/allencahn.hpp"

namespace phaseflow {

double reaction_flow_scalar(double eps, double s, double v) {
  const double growth = std::exp(s / eps);
  const double dev = v - 0.5;
  if (growth * std::abs(dev) < 0.5) return 0.5 + growth * dev;
  return dev >= 0.0 ? 1.0 : 0.0;
}

VertexFunction reaction_flow(double eps, double s, const VertexFunction& v) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (s < 0.0) throw std::invalid_argument("time must be nonnegative");
  VertexFunction out(v.size());
  for (int i = 0; i < v.size(); ++i) out[i] = reaction_flow_scalar(eps, s, v[i]);
  return out;
}

VertexFunction reaction_exact(double eps, double tau, const VertexFunction& v) {
  return reaction_flow(eps, tau, v);
}

VertexFunction ts_step(const Graph& g, const SpectralDecomposition& dec,
                       const SchemeParams& params, const VertexFunction& u) {
  if (u.size() != g.size()) throw std::invalid_argument("vertex function length mismatch");
  return reaction_exact(params.epsilon, params.tau, dec.heat_apply(params.tau, u));
}

bool wells_proximity_compare(const SchemeParams& params, const VertexFunction& v) {
  const double lam = params.lambda();
  if (!(lam >= 0.0 && lam <= 1.0))
    throw std::invalid_argument("wells comparison requires lambda in [0,1]");
  for (int i = 0; i < v.size(); ++i) {
    const double ts = reaction_flow_scalar(params.epsilon, params.tau, v[i]);
    const double sd =
        lam == 1.0 ? (v[i] >= 0.5 ? 1.0 : 0.0) : rho_lambda_scalar(lam, v[i]);
    if (std::abs(ts - 0.5) > std::abs(sd - 0.5) + 1e-14) return false;
  }
  return true;
}

bool ts_vs_ac_wells(const Graph& g, const SpectralDecomposition& dec, double eps,
                    double tau, const VertexFunction& u0,
                    const std::vector<double>& t_grid, double tol) {
  if (t_grid.empty()) throw std::invalid_argument("t_grid must be non-empty");
  const double t_end = t_grid.back();
  // certify the interior regime on a fine grid covering [0, t_end]
  const int cert_points = 512;
  for (int k = 0; k <= cert_points; ++k) {
    const VertexFunction u = interior_closed_form(g, dec, eps, u0, t_end * k / cert_points);
    if ((u.array() <= 0.0).any() || (u.array() >= 1.0).any())
      throw std::invalid_argument("trajectory leaves the interior regime on [0, t_end]");
  }
  const VertexFunction half = constant_vector(g, 0.5);
  VertexFunction u_window = u0;  // splitting state at the last window start
  int window = 0;
  const SchemeParams params(eps, tau);
  for (double t : t_grid) {
    const int target = t <= 0.0 ? 0 : static_cast<int>(std::ceil(t / tau - 1e-12)) - 1;
    while (window < target) {
      u_window = ts_step(g, dec, params, u_window);
      ++window;
    }
    VertexFunction u_ts = u_window;
    if (t > window * tau)
      u_ts = reaction_flow(eps, t - window * tau, dec.heat_apply(tau, u_window));
    const VertexFunction u_ac = interior_closed_form(g, dec, eps, u0, t);
    if (sup_norm(u_ac - half) < sup_norm(u_ts - half) - tol) return false;
  }
  return true;
}

}  // namespace phaseflow
