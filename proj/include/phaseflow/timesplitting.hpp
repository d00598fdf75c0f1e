// Diffusion-reaction splitting of the Allen-Cahn flow: exact heat step, then
// the exactly solved obstacle reaction ODE (componentwise exponential
// repulsion from 1/2 that freezes at the obstacles).
#ifndef PHASEFLOW_TIMESPLITTING_HPP
#define PHASEFLOW_TIMESPLITTING_HPP

#include <vector>

#include "phaseflow/semidiscrete.hpp"

namespace phaseflow {

// Exact solution at time s of eps x' = x - 1/2 + beta from x(0) = v_i:
// 1/2 + e^{s/eps}(v_i - 1/2) while that stays strictly inside (0,1), frozen at
// Theta(v_i - 1/2) once it reaches an obstacle (Theta(0) = 1; the borderline
// e^{s/eps}|v_i - 1/2| = 1/2 clamps).
VertexFunction reaction_flow(double eps, double s, const VertexFunction& v);
double reaction_flow_scalar(double eps, double s, double v);

// Reaction step over a full window tau, exponent lambda = tau/eps.
VertexFunction reaction_exact(double eps, double tau, const VertexFunction& v);

// One splitting step: reaction_exact after heat_apply(tau).
VertexFunction ts_step(const Graph& g, const SpectralDecomposition& dec,
                       const SchemeParams& params, const VertexFunction& u);

// Checks |reaction_exact(v)_i - 1/2| <= |sd update(v)_i - 1/2| componentwise,
// the per-step statement that the semi-discrete update ends at least as close
// to the wells. lambda in [0,1].
bool wells_proximity_compare(const SchemeParams& params, const VertexFunction& v);

// Along an interior trajectory, checks the sup-norm comparison
// ||u_AC(t) - 1/2||_inf >= ||U_TS(t) - 1/2||_inf - tol at the grid times.
// Throws if the interior closed form is not certified on the grid.
bool ts_vs_ac_wells(const Graph& g, const SpectralDecomposition& dec, double eps,
                    double tau, const VertexFunction& u0,
                    const std::vector<double>& t_grid, double tol = 1e-10);

}  // namespace phaseflow

#endif  // PHASEFLOW_TIMESPLITTING_HPP
