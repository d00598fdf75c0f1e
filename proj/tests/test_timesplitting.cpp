#include <doctest.h>

#include <cmath>

#include "phaseflow/allencahn.hpp"
#include "phaseflow/timesplitting.hpp"
#include "test_util.hpp"

using namespace phaseflow;
using phaseflow::testing::random_connected_graph;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = a + (b - a) * k / (n - 1);
  return out;
}

}  // namespace

TEST_CASE("exact reaction solve") {
  const double eps = 1.0, tau = 0.6;  // lambda = 0.6
  VertexFunction v(3);
  v << 0.5, 0.0, 0.6;
  const VertexFunction out = reaction_exact(eps, tau, v);
  CHECK(out[0] == 0.5);
  CHECK(out[1] == 0.0);  // wells are stationary
  CHECK(out[2] == doctest::Approx(0.5 + std::exp(0.6) * 0.1).epsilon(1e-14));

  // fixes {0, 1/2, 1} exactly and is odd about 1/2
  Rng rng(61);
  for (int k = 0; k < 300; ++k) {
    const double e = rng.uniform(0.3, 2.0);
    const double t = rng.uniform(0.05, 2.0);
    CHECK(reaction_flow_scalar(e, t, 0.0) == 0.0);
    CHECK(reaction_flow_scalar(e, t, 0.5) == 0.5);
    CHECK(reaction_flow_scalar(e, t, 1.0) == 1.0);
    const double d = rng.uniform(0.0, 0.5);
    const double up = reaction_flow_scalar(e, t, 0.5 + d);
    const double dn = reaction_flow_scalar(e, t, 0.5 - d);
    CHECK(up - 0.5 == doctest::Approx(0.5 - dn).epsilon(1e-12));
  }

  // the borderline e^{lambda}|v - 1/2| = 1/2 clamps (Theta branch)
  const double lam = 0.4;
  const double v_edge = 0.5 + 0.5 * std::exp(-lam);
  CHECK(reaction_flow_scalar(1.0, lam, v_edge) == 1.0);
}

TEST_CASE("splitting step basics") {
  const Graph k2 = make_path(2, 0.0);
  const SpectralDecomposition dec(k2);

  const SchemeParams params(1.0, 0.3);
  const VertexFunction half = constant_vector(k2, 0.5);
  CHECK(sup_norm(ts_step(k2, dec, params, half) - half) <= 1e-15);

  // K2 composition of closed forms
  VertexFunction chi(2);
  chi << 1, 0;
  const double dev = 0.5 * std::exp(-2.0 * 0.3);
  const VertexFunction out = ts_step(k2, dec, params, chi);
  const double grown = std::exp(0.3) * dev;  // 0.742 > 1/2 -> clamps
  if (grown >= 0.5) {
    CHECK(out[0] == 1.0);
    CHECK(out[1] == 0.0);
  }

  // pinning under diffusion dominance: eps <= 1/2 makes K2 indicators fixed
  const SchemeParams pin(0.3, 0.3);
  CHECK((ts_step(k2, dec, pin, chi) - chi).cwiseAbs().maxCoeff() == 0.0);

  // range preservation
  Rng rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_connected_graph(rng, 6, trial % 2 ? 1.0 : 0.0);
    const SpectralDecomposition d(g);
    const SchemeParams p(rng.uniform(0.3, 1.5), rng.uniform(0.05, 0.8));
    const VertexFunction u = testing::random_box(rng, g.size());
    const VertexFunction next = ts_step(g, d, p, u);
    CHECK(next.minCoeff() >= 0.0);
    CHECK(next.maxCoeff() <= 1.0);
  }
}

TEST_CASE("per-step wells comparison against the semi-discrete update") {
  // spec'd scalar example: lambda = 0.6, v = 0.6
  const double ts = reaction_flow_scalar(1.0, 0.6, 0.6);
  const double sd = rho_lambda_scalar(0.6, 0.6);
  CHECK(ts == doctest::Approx(0.5 + 0.18221188003905089));
  CHECK(sd == doctest::Approx(0.75));
  CHECK(std::abs(ts - 0.5) <= std::abs(sd - 0.5));

  const VertexFunction half = constant_vector(Graph(make_path(2, 0.0)), 0.5);
  CHECK(wells_proximity_compare(SchemeParams(1.0, 0.6), half));

  // band edge: both sides clamp to the well
  VertexFunction edge(1);
  edge << 0.75;
  CHECK(wells_proximity_compare(SchemeParams(1.0, 0.6), edge));

  Rng rng(63);
  for (int k = 0; k < 10000; ++k) {
    const double lambda = rng.uniform(0.0, 1.0);
    const double tau = rng.uniform(0.05, 1.0);
    VertexFunction v(1);
    v << rng.uniform();
    CHECK(wells_proximity_compare(SchemeParams::from_lambda(tau, lambda), v));
  }
}

TEST_CASE("interior agreement with the AC flow at window boundaries") {
  const Graph c4 = make_cycle(4, 0.0);
  const SpectralDecomposition dec(c4);
  VertexFunction u0(4);
  u0 << 0.55, 0.5, 0.45, 0.5;  // mean 1/2, deviations decay: interior forever
  const double eps = 1.0, tau = 0.2;
  const SchemeParams params(eps, tau);
  VertexFunction u = u0;
  for (int n = 1; n <= 10; ++n) {
    u = ts_step(c4, dec, params, u);
    const VertexFunction exact = interior_closed_form(c4, dec, eps, u0, n * tau);
    CHECK(sup_norm(u - exact) <= 1e-9);
  }
}

TEST_CASE("AC flow stays at least as close to the wells (TSineq)") {
  const Graph k2 = make_path(2, 0.0);
  const SpectralDecomposition dec(k2);
  VertexFunction u0(2);
  u0 << 0.6, 0.4;
  CHECK(ts_vs_ac_wells(k2, dec, 1.0, 0.25, u0, linspace(0.0, 1.5, 40)));

  // constant initial data: equality throughout
  const Graph c4 = make_cycle(4, 0.0);
  const SpectralDecomposition dec4(c4);
  CHECK(ts_vs_ac_wells(c4, dec4, 1.0, 0.2, constant_vector(c4, 0.4),
                       linspace(0.0, 0.3, 10)));

  Rng rng(64);
  for (int trial = 0; trial < 5; ++trial) {
    VertexFunction w0(4);
    double mean = 0.0;
    for (int i = 0; i < 4; ++i) mean += (w0[i] = rng.uniform(0.35, 0.65));
    w0.array() += 0.5 - mean / 4;  // centre the mass so the flow stays interior
    CHECK(ts_vs_ac_wells(c4, dec4, 1.0, 0.15, w0, linspace(0.0, 1.0, 25)));
  }

  // a trajectory that freezes violates the precondition
  CHECK_THROWS_AS((void)ts_vs_ac_wells(c4, dec4, 0.5, 0.2, constant_vector(c4, 0.25),
                                       linspace(0.0, 1.0, 10)),
                  std::invalid_argument);
}
