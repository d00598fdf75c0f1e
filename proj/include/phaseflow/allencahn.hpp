// Double-obstacle Allen-Cahn flow on a graph: the pointwise obstacle reaction
// beta, the regularised C^1-potential flow, the semi-discrete reference
// trajectory, interior closed forms, and executable versions of the integral
// form, weak form, energy-decrease and regularity statements.
#ifndef PHASEFLOW_ALLENCAHN_HPP
#define PHASEFLOW_ALLENCAHN_HPP

#include "phaseflow/graph.hpp"
#include "phaseflow/spectral.hpp"
#include "phaseflow/trajectory.hpp"

namespace phaseflow {

// beta_i = 1/2 + eps (Lap u)_i where u_i = 0, 0 in the interior,
// -1/2 + eps (Lap u)_i where u_i = 1. Values within snap_tol of an obstacle
// are treated as on it.
VertexFunction beta_explicit(const Graph& g, double eps, const VertexFunction& u,
                             double snap_tol = 1e-9);

// C^1 regularisation of the double-obstacle potential, wells of depth -nu/4
// at -nu and 1+nu.
double w_nu(double nu, double x);
double w_nu_prime(double nu, double x);

// RK4 integration of du/dt = -Lap u - (1/eps) W_nu'(u) from u0 in [0,1]^V.
// dt <= 0 selects min(0.1 eps nu, 0.01/||Lap||). States must stay inside
// [-nu - 1e-6, 1 + nu + 1e-6]; a step leaving it throws std::runtime_error.
// betas carry the regularised reaction 1/2 - u - W_nu'(u).
Trajectory regularized_flow(const Graph& g, const SpectralDecomposition& dec, double eps,
                            double nu, const VertexFunction& u0, double t_end,
                            double dt = 0.0);

// Semi-discrete reference trajectory for the AC flow: iterates with step
// tau_ref (<= 0 selects eps/1024) and samples step m = ceil(t/tau_ref) for
// each requested t. Reported times are the discrete ones, m tau_ref, with
// duplicates dropped. betas[0] carries the t -> 0+ representative.
Trajectory ac_reference(const Graph& g, const SpectralDecomposition& dec, double eps,
                        const VertexFunction& u0, const std::vector<double>& t_grid,
                        double tau_ref = 0.0);

// u(t) = 1/2 + e^{t/eps} e^{-t Lap}(u0 - 1/2), valid while the flow stays in
// (0,1)^V so the reaction vanishes.
VertexFunction interior_closed_form(const Graph& g, const SpectralDecomposition& dec,
                                    double eps, const VertexFunction& u0, double t);

// First time the constant trajectory from alpha 1, alpha in (0,1/2), reaches
// the lower obstacle and freezes: -eps log(1 - 2 alpha).
double freeze_time_alpha(double eps, double alpha);

// Max over trajectory times of the V-norm gap between u(t) and the integral
// representation 1/2 + e^{tA}(u0 - 1/2) + (1/eps) int_0^t e^{(t-s)A} beta(s) ds,
// the time integral by the trapezoid rule over the trajectory's own samples.
double integral_form_residual(const Graph& g, const SpectralDecomposition& dec, double eps,
                              const Trajectory& traj);

// Min over interior sample times and test states eta (random draws, the
// single-coordinate 0/1 corners of u, and u itself) of
//   <eps du/dt - u + 1/2, eta - u>_V + eps <grad u, grad eta - grad u>_E
// with du/dt by central differences. A solution keeps this >= -tol.
double weak_form_residual(const Graph& g, double eps, const Trajectory& traj,
                          int eta_samples, std::uint64_t seed = 0);

// GL(u(s)) - GL(u(t)) >= ||u(s)-u(t)||_V^2 / (2(t-s)) - tol over all sampled
// pairs s < t.
bool gl_decrease_check(const Graph& g, const Trajectory& traj, double eps, double tol);

// ||u(s)-u(t)||_V <= sqrt(|t-s|) sqrt(2 GL(u(0))) + tol over all sampled pairs.
bool holder_half_check(const Graph& g, const Trajectory& traj, double eps, double tol);

// ||u(t)-v(t)||_V <= e^{t/eps} ||u0-v0||_V (1 + 1e-8) along the two reference
// trajectories at the grid times.
bool wellposed_bound_check(const Graph& g, const SpectralDecomposition& dec, double eps,
                           const VertexFunction& u0, const VertexFunction& v0,
                           const std::vector<double>& t_grid, double tau_ref = 0.0);

}  // namespace phaseflow

#endif  // PHASEFLOW_ALLENCAHN_HPP
