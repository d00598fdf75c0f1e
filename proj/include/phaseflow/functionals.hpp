// Energies of the graph phase-field dynamics: the double-obstacle potential W,
// the Ginzburg-Landau functional GL_eps, the scheme Lyapunov functional H and
// its MBO specialisation J, the scaled H, the sharp-interface limit f0, and
// the gradient/stationarity structure of H.
#ifndef PHASEFLOW_FUNCTIONALS_HPP
#define PHASEFLOW_FUNCTIONALS_HPP

#include <limits>

#include "phaseflow/graph.hpp"
#include "phaseflow/spectral.hpp"

namespace phaseflow {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// W(x) = x(1-x)/2 on [0,1], +infinity outside.
double double_obstacle_W(double x);

// GL_eps(u) = 1/2 ||grad u||_E^2 + (1/eps) <W o u, 1>_V; +infinity as soon as
// any u_i leaves [0,1] (the domain is checked before accumulating).
double ginzburg_landau(const Graph& g, double eps, const VertexFunction& u);

// J(u) = <1-u, e^{-tau Lap} u>_V, the MBO Lyapunov functional.
double mbo_lyapunov_J(const Graph& g, const SpectralDecomposition& dec, double tau,
                      const VertexFunction& u);

// H(u) = lambda <u,1-u>_V + <u, (I - e^{-tau Lap}) u>_V with lambda = tau/eps.
// Nonnegative on [0,1]^V for lambda in [0,1]; equals J + (lambda-1)<u,1-u>.
double lyapunov_H(const Graph& g, const SpectralDecomposition& dec, double eps, double tau,
                  const VertexFunction& u);

// H(u)/(2 tau); within (tau/4)||Lap||^2 ||u||_V^2 of GL_eps(u) on [0,1]^V.
double scaled_lyapunov(const Graph& g, const SpectralDecomposition& dec, double eps,
                       double tau, const VertexFunction& u);

// f0(u) = TV(u)/2 on binary states, +infinity on the rest of [0,1]^V (and
// outside). Values within 1e-12 of {0,1} are quantised before the binary test.
double limit_functional_f0(const Graph& g, const VertexFunction& u);

// grad_V H(u) = lambda 1 - 2 e^{-tau Lap} u + 2(1-lambda) u.
VertexFunction lyapunov_gradient(const Graph& g, const SpectralDecomposition& dec,
                                 double eps, double tau, const VertexFunction& u);

// True iff grad_V H(u) vanishes (sup norm below tol). For interior u this
// happens exactly on the affine set 1/2 + E, E the eigenspace of e^{-tau Lap}
// with eigenvalue 1-lambda (or {0}).
bool stationary_set_check(const Graph& g, const SpectralDecomposition& dec, double eps,
                          double tau, const VertexFunction& u, double tol = 1e-10);

// True iff u = 1/2 is a global maximiser of H on [0,1]^V, i.e. lambda <= 1 and
// e^{-tau lam_k} >= 1 - lambda for every Laplacian eigenvalue lam_k
// (equivalently eps in [tau, tau/(1-e^{-tau ||Lap||})]).
bool half_one_global_max_condition(const Graph& g, const SpectralDecomposition& dec,
                                   double eps, double tau);

// Energy diagnostics attached to trajectory samples.
struct EnergyReport {
  double gl = 0.0;  // may be +infinity off [0,1]^V
  double h = 0.0;
  double j = 0.0;
  double tv = 0.0;
  double dirichlet = 0.0;
};

EnergyReport energy_report(const Graph& g, const SpectralDecomposition& dec, double eps,
                           double tau, const VertexFunction& u);

}  // namespace phaseflow

#endif  // PHASEFLOW_FUNCTIONALS_HPP
