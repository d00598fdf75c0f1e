#include <doctest.h>

#include <cmath>

#include "phaseflow/functionals.hpp"
#include "phaseflow/io.hpp"
#include "test_util.hpp"

using namespace phaseflow;
using phaseflow::testing::random_connected_graph;

TEST_CASE("double obstacle potential") {
  CHECK(double_obstacle_W(0.0) == 0.0);
  CHECK(double_obstacle_W(1.0) == 0.0);
  CHECK(double_obstacle_W(0.5) == doctest::Approx(0.125));
  CHECK(double_obstacle_W(-0.1) == kInfinity);
  CHECK(double_obstacle_W(1.1) == kInfinity);
}

TEST_CASE("Ginzburg-Landau values") {
  const Graph k2 = make_path(2, 0.0);
  VertexFunction binary(2);
  binary << 1, 0;
  CHECK(ginzburg_landau(k2, 0.35, binary) == doctest::Approx(dirichlet_energy(k2, binary)));

  VertexFunction half = constant_vector(k2, 0.5);
  CHECK(ginzburg_landau(k2, 1.0, half) == doctest::Approx(0.25));

  VertexFunction out(2);
  out << 1.5, 0.2;
  CHECK(ginzburg_landau(k2, 1.0, out) == kInfinity);
  VertexFunction neg(2);
  neg << -0.01, 0.2;
  CHECK(ginzburg_landau(k2, 1.0, neg) == kInfinity);
}

TEST_CASE("MBO Lyapunov J") {
  const Graph k2 = make_path(2, 0.0);
  const SpectralDecomposition dec(k2);
  const double tau = 0.42;
  CHECK(mbo_lyapunov_J(k2, dec, tau, VertexFunction::Zero(2)) == doctest::Approx(0.0));
  CHECK(mbo_lyapunov_J(k2, dec, tau, constant_vector(k2, 1.0)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  VertexFunction u(2);
  u << 1, 0;
  CHECK(mbo_lyapunov_J(k2, dec, tau, u) ==
        doctest::Approx(0.5 - 0.5 * std::exp(-2.0 * tau)).epsilon(1e-12));
}

TEST_CASE("Lyapunov H values and identities") {
  const Graph k2 = make_path(2, 0.0);
  const SpectralDecomposition dec(k2);
  const double tau = 0.3;

  VertexFunction chi(2);
  chi << 1, 0;
  for (double eps : {0.4, 1.0, 3.0}) {
    CHECK(lyapunov_H(k2, dec, eps, tau, chi) ==
          doctest::Approx(0.5 * (1.0 - std::exp(-2.0 * tau))).epsilon(1e-12));
  }

  // lambda = 1 collapses H to J; general lambda obeys H = J + (lambda-1)<u,1-u>
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_connected_graph(rng, 6, trial % 2 ? 1.0 : 0.0);
    const SpectralDecomposition d(g);
    const VertexFunction u = testing::random_box(rng, g.size());
    const double t = rng.uniform(0.05, 0.8);
    CHECK(lyapunov_H(g, d, t, t, u) == doctest::Approx(mbo_lyapunov_J(g, d, t, u)).epsilon(1e-12));

    const double eps = rng.uniform(0.2, 2.0);
    const double lambda = t / eps;
    const double expected =
        mbo_lyapunov_J(g, d, t, u) +
        (lambda - 1.0) * vertex_inner(g, u, constant_vector(g, 1.0) - u);
    CHECK(std::abs(lyapunov_H(g, d, eps, t, u) - expected) <= 1e-10);
  }

  // binary states kill the potential part
  VertexFunction ones = constant_vector(k2, 1.0);
  const double quad = vertex_inner(k2, chi, chi) - vertex_inner(k2, chi, dec.heat_apply(tau, chi));
  CHECK(lyapunov_H(k2, dec, 0.77, tau, chi) == doctest::Approx(quad).epsilon(1e-12));
  CHECK(lyapunov_H(k2, dec, 0.77, tau, ones) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("H is nonnegative on the box for lambda in [0,1]") {
  Rng rng(22);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = random_connected_graph(rng, 5 + rng.uniform_int(4), trial % 2 ? 1.0 : 0.0);
    const SpectralDecomposition dec(g);
    const double tau = rng.uniform(0.05, 1.0);
    for (double lambda : {0.0, 0.25, 0.5, 1.0}) {
      const double eps = lambda == 0.0 ? kInfinity : tau / lambda;
      for (int k = 0; k < 20; ++k)
        CHECK(lyapunov_H(g, dec, eps, tau, testing::random_box(rng, g.size())) >= -1e-12);
    }
  }
  // binary exhaustive on a 10-vertex graph
  const Graph g = random_connected_graph(rng, 10, 0.0);
  const SpectralDecomposition dec(g);
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    const VertexFunction chi = indicator(g, testing::mask_to_vertices(mask, 10));
    CHECK(lyapunov_H(g, dec, 0.4, 0.2, chi) >= -1e-12);
  }
}

TEST_CASE("scaled Lyapunov approaches GL as tau -> 0 and obeys the Q_tau bound") {
  const Graph k2 = make_path(2, 0.0);
  const SpectralDecomposition dec(k2);
  VertexFunction chi(2);
  chi << 1, 0;
  const double lambda = 0.5;
  const double gl = ginzburg_landau(k2, 1.0, chi);  // = 1/2, eps plays no role on binary u
  double prev_gap = kInfinity;
  for (double tau : {0.4, 0.2, 0.1, 0.05, 0.025}) {
    const double gap = std::abs(scaled_lyapunov(k2, dec, tau / lambda, tau, chi) - gl);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap <= 0.02);
  CHECK(scaled_lyapunov(k2, dec, 1.0, 0.5, VertexFunction::Zero(2)) == doctest::Approx(0.0));
  CHECK(scaled_lyapunov(k2, dec, 1.0, 0.5, constant_vector(k2, 1.0)) ==
        doctest::Approx(0.0).epsilon(1e-12));

  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_connected_graph(rng, 6, trial % 2 ? 1.0 : 0.0);
    const SpectralDecomposition d(g);
    const double tau = rng.uniform(0.02, 0.6);
    const double eps = rng.uniform(tau, 2.0);
    const VertexFunction u = testing::random_box(rng, g.size());
    const double bound =
        0.25 * tau * d.operator_norm() * d.operator_norm() * vertex_inner(g, u, u);
    CHECK(std::abs(scaled_lyapunov(g, d, eps, tau, u) - ginzburg_landau(g, eps, u)) <=
          bound + 1e-12);
  }
}

TEST_CASE("limit functional f0") {
  const Graph k2 = make_path(2, 0.0);
  CHECK(limit_functional_f0(k2, indicator(k2, {0})) == doctest::Approx(0.5));
  CHECK(limit_functional_f0(k2, constant_vector(k2, 0.5)) == kInfinity);
  CHECK(limit_functional_f0(k2, VertexFunction::Zero(2)) == 0.0);
  VertexFunction nearly(2);
  nearly << 1e-13, 1.0 - 1e-13;
  CHECK(limit_functional_f0(k2, nearly) == doctest::Approx(0.5));
}

TEST_CASE("Lyapunov gradient closed forms and finite differences") {
  const Graph k2 = make_path(2, 0.0);
  const SpectralDecomposition dec(k2);

  // 1/2 is stationary for every (eps, tau)
  CHECK(sup_norm(lyapunov_gradient(k2, dec, 0.7, 0.3, constant_vector(k2, 0.5))) <= 1e-14);

  // lambda = 0: grad H = 2(u - e^{-tau Lap}u)
  const double tau = 0.6;
  VertexFunction u(2);
  u << 1, 0;
  const VertexFunction grad = lyapunov_gradient(k2, dec, kInfinity, tau, u);
  const double expected = 1.0 - std::exp(-2.0 * tau);
  CHECK(grad[0] == doctest::Approx(expected).epsilon(1e-12));
  CHECK(grad[1] == doctest::Approx(-expected).epsilon(1e-12));

  // central finite differences of H in the d^r-weighted pairing
  Rng rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_connected_graph(rng, 5, trial % 2 ? 1.0 : 0.0);
    const SpectralDecomposition d(g);
    const double t = rng.uniform(0.1, 0.7);
    const double eps = rng.uniform(0.3, 2.0);
    const VertexFunction base = testing::random_box(rng, g.size(), 0.2, 0.8);
    const VertexFunction analytic = lyapunov_gradient(g, d, eps, t, base);
    const double h = 1e-6;
    for (int i = 0; i < g.size(); ++i) {
      VertexFunction up = base, dn = base;
      up[i] += h;
      dn[i] -= h;
      const double fd =
          (lyapunov_H(g, d, eps, t, up) - lyapunov_H(g, d, eps, t, dn)) / (2.0 * h);
      const double directional = analytic[i] * g.vertex_measure(i);
      CHECK(fd == doctest::Approx(directional).epsilon(1e-6));
    }
  }
}

TEST_CASE("stationary set of H") {
  const Graph k2 = make_path(2, 0.0);
  const SpectralDecomposition dec(k2);

  CHECK(stationary_set_check(k2, dec, 0.9, 0.2, constant_vector(k2, 0.5)));

  // tune tau so that e^{-2 tau} = 1 - lambda: the eigenvector direction is flat
  const double lambda = 0.5;
  const double tau = -0.5 * std::log(1.0 - lambda);
  const double eps = tau / lambda;
  VertexFunction xi(2);
  xi << 1, -1;
  CHECK(stationary_set_check(k2, dec, eps, tau, constant_vector(k2, 0.5) + 0.1 * xi));
  // off the affine set the gradient is nonzero
  VertexFunction off(2);
  off << 0.62, 0.45;
  CHECK_FALSE(stationary_set_check(k2, dec, eps, tau, off));
  // interior states at generic parameters are not stationary either
  CHECK_FALSE(stationary_set_check(k2, dec, 1.1, 0.2, constant_vector(k2, 0.5) + 0.1 * xi));
}

TEST_CASE("global maximiser condition for 1/2") {
  const Graph k2 = make_path(2, 0.0);
  const SpectralDecomposition dec(k2);

  CHECK(half_one_global_max_condition(k2, dec, 0.37, 0.37));  // eps = tau
  const double tau = 1.0;
  const double eps_edge = tau / (1.0 - std::exp(-2.0 * tau));  // ||Lap|| = 2
  CHECK(half_one_global_max_condition(k2, dec, eps_edge * 0.999, tau));
  CHECK_FALSE(half_one_global_max_condition(k2, dec, eps_edge * 1.01, tau));
  CHECK_FALSE(half_one_global_max_condition(k2, dec, 0.5 * tau, tau));  // lambda > 1

  // exhaustive grid: no grid point beats H(1/2 1) when the condition holds,
  // and the edge eigendirection does beat it once the condition fails
  for (const Graph& g : {make_path(2, 0.0), make_path(4, 1.0), make_star(4, 0.0)}) {
    const SpectralDecomposition d(g);
    const int K = 20;
    const int n = g.size();
    for (double eps : {tau, 0.9 * tau / (1.0 - std::exp(-tau * d.operator_norm()))}) {
      if (!half_one_global_max_condition(g, d, eps, tau)) continue;
      const double h_half = lyapunov_H(g, d, eps, tau, constant_vector(g, 0.5));
      std::vector<int> digits(n, 0);
      bool done = false;
      while (!done) {
        VertexFunction u(n);
        for (int i = 0; i < n; ++i) u[i] = double(digits[i]) / K;
        CHECK(lyapunov_H(g, d, eps, tau, u) <= h_half + 1e-10);
        int pos = 0;
        while (pos < n && ++digits[pos] > K) digits[pos++] = 0;
        done = pos == n;
      }
    }
  }
  const double eps_big = eps_edge * 1.3;
  REQUIRE_FALSE(half_one_global_max_condition(k2, dec, eps_big, tau));
  VertexFunction beat(2);
  beat << 0.5 + 0.45, 0.5 - 0.45;
  CHECK(lyapunov_H(k2, dec, eps_big, tau, beat) >
        lyapunov_H(k2, dec, eps_big, tau, constant_vector(k2, 0.5)));
}

TEST_CASE("energy report serialises with the expected keys") {
  const Graph k2 = make_path(2, 0.0);
  const SpectralDecomposition dec(k2);
  VertexFunction u(2);
  u << 0.25, 0.75;
  const EnergyReport rep = energy_report(k2, dec, 1.0, 0.5, u);
  const nlohmann::json j = energy_to_json(rep);
  for (const char* key : {"gl", "h", "j", "tv", "dirichlet"}) CHECK(j.contains(key));
  CHECK(j["tv"].get<double>() == doctest::Approx(total_variation(k2, u)));
  CHECK(j["gl"].get<double>() == doctest::Approx(ginzburg_landau(k2, 1.0, u)));
}
