// The semi-discrete scheme: one exact diffusion step followed by the implicit
// obstacle-potential step, solved in closed form by the piecewise-linear
// threshold rho_lambda. Contains graph MBO as the lambda = 1 case, the
// extended lambda regimes, pinning bounds and the iteration Lipschitz check.
#ifndef PHASEFLOW_SEMIDISCRETE_HPP
#define PHASEFLOW_SEMIDISCRETE_HPP

#include "phaseflow/graph.hpp"
#include "phaseflow/spectral.hpp"
#include "phaseflow/trajectory.hpp"

namespace phaseflow {

struct SchemeParams {
  // +infinity encodes the pure-diffusion case lambda = 0; a negative value
  // encodes the formal lambda < 0 regime.
  double epsilon;
  double tau;  // > 0

  SchemeParams(double eps_, double tau_);
  // Build from (tau, lambda); lambda = 0 maps to epsilon = +infinity.
  static SchemeParams from_lambda(double tau_, double lambda_);

  double lambda() const { return tau / epsilon; }

  enum class Regime { SubUnit, Mbo, SuperUnit, Negative };
  Regime regime() const;
};

struct SchemeState {
  VertexFunction u;     // in [0,1]^V
  VertexFunction beta;  // in [-1/2,1/2]^V
};

// Closed-form solution of the implicit obstacle step, lambda in [0,1):
// 0 below lambda/2, the linear stretch 1/2 + (v-1/2)/(1-lambda) in the middle
// band, 1 from 1-lambda/2 upwards. Throws for lambda outside [0,1).
VertexFunction rho_lambda(double lambda, const VertexFunction& v);
double rho_lambda_scalar(double lambda, double v);

// Matching obstacle reaction, lambda in (0,1): (1/2 - v/lambda) below the
// band, 0 on it, (-1/2 + (1-v)/lambda) above.
VertexFunction beta_from_diffused(double lambda, const VertexFunction& v);
double beta_from_diffused_scalar(double lambda, double v);

// One scheme step for lambda in [0,1]. lambda = 0 is the pure diffusion step
// with beta = 0; lambda = 1 is MBO thresholding with beta = 1/2 - diffused.
// Throws for lambda outside [0,1].
SchemeState sd_step(const Graph& g, const SpectralDecomposition& dec,
                    const SchemeParams& params, const VertexFunction& u);

// Diffuse the (binary) state for time tau, then threshold at 1/2 (values
// exactly 1/2 map to 1).
VertexFunction mbo_step(const Graph& g, const SpectralDecomposition& dec, double tau,
                        const VertexFunction& u_binary);

// Iterate sd_step, recording states, betas and energies. Stops early when
// consecutive states agree within fixed_point_tol (0 = exact equality, apt
// for the thresholded branches; pass a small tolerance for the linear branch).
Trajectory sd_run(const Graph& g, const SpectralDecomposition& dec,
                  const SchemeParams& params, const VertexFunction& u0, int n_steps,
                  double fixed_point_tol = 0.0);

// lambda > 1: the variational solution, which is exactly the MBO threshold
// (ties -> 1). Throws for lambda <= 1.
VertexFunction step_lambda_gt1(const Graph& g, const SpectralDecomposition& dec,
                               const SchemeParams& params, const VertexFunction& u);

// lambda < 0: the unique variational solution (1-lambda)^{-1}(diffused -
// (lambda/2) 1), strictly interior, with beta = 0. Throws for lambda >= 0.
SchemeState step_lambda_neg(const Graph& g, const SpectralDecomposition& dec,
                            const SchemeParams& params, const VertexFunction& u);

// Sufficient time-step bounds for one step to fix the indicator of S:
//   bound1 = ||Lap||^{-1} log(1 + (lambda/2) sqrt(min_i d_i^r / <chi_S,1>_V))
//   bound2 = lambda / (2 ||Lap chi_S||_inf)
// tau <= either bound pins for lambda < 1; for lambda = 1 bound1 needs strict
// inequality. Bounds may be +infinity (chi_S diffusion-invariant).
struct PinningBounds {
  double bound1;
  double bound2;
  double max_bound() const { return bound1 > bound2 ? bound1 : bound2; }
};
PinningBounds pinning_bounds(const Graph& g, const SpectralDecomposition& dec,
                             const std::vector<int>& s, double lambda);

// Runs both iterations n steps and checks
// ||u_k - v_k||_V <= (1-lambda)^{-k} ||u0 - v0||_V (1 + 1e-10) for all k <= n.
bool sd_lipschitz_check(const Graph& g, const SpectralDecomposition& dec,
                        const SchemeParams& params, const VertexFunction& u0,
                        const VertexFunction& v0, int n);

}  // namespace phaseflow

#endif  // PHASEFLOW_SEMIDISCRETE_HPP
