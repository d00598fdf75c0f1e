// Three graph mean-curvature-flow formulations: the distance-weighted set
// minimisation, the smoothed-seminorm set minimisation resembling MBO, and
// the curvature ODE flow driven by signed gradient sums.
#ifndef PHASEFLOW_MCF_HPP
#define PHASEFLOW_MCF_HPP

#include <utility>
#include <vector>

#include "phaseflow/graph.hpp"
#include "phaseflow/spectral.hpp"
#include "phaseflow/trajectory.hpp"

namespace phaseflow {

struct VertexSet {
  std::vector<char> membership;  // one entry per vertex, 0 or 1

  VertexSet() = default;
  explicit VertexSet(int n) : membership(n, 0) {}
  static VertexSet from_indicator(const VertexFunction& chi);
  VertexFunction to_indicator() const;
  int size() const { return static_cast<int>(membership.size()); }
  bool contains(int i) const { return membership[i] != 0; }
  void insert(int i) { membership[i] = 1; }
  int count() const;
  bool operator==(const VertexSet& other) const { return membership == other.membership; }
};

// Vertices incident to a cut edge of S.
VertexSet boundary_set(const Graph& g, const VertexSet& s);

// Hop-count distance from each vertex to the set sigma (0 on it). Weighted
// shortest-path distances behind the flag. Distance to the empty set is
// +infinity.
VertexFunction graph_distance_to(const Graph& g, const VertexSet& sigma,
                                 bool weighted = false);

// One step of the distance-weighted variational set scheme:
//   argmin_{S'} TV(chi_S') + (1/dt) <chi_S' - chi_S, (chi_S' - chi_S) d^Sigma>_V
// by exhaustive enumeration (|V| <= exhaustive_limit, else throws). Ties break
// to the smallest symmetric difference from S, then the lexicographically
// smallest membership vector.
VertexSet vggob_mcf_step(const Graph& g, const VertexSet& s, double dt,
                         int exhaustive_limit = 20);

// Complete graph with weight eps on all non-edges. eps <= 0 returns g
// unchanged with a warning on stderr.
Graph augment_complete(const Graph& g, double eps);

// One step of the smoothed set scheme:
//   argmin_{S'} TV(chi_S') + (1/tau) ||e^{-tau Lap/2}(chi_S' - chi_S)||_V^2
VertexSet new_mcf_step(const Graph& g, const SpectralDecomposition& dec,
                       const VertexSet& s, double tau, int exhaustive_limit = 20);

// K_i = sum_j (w_ij / d_i) sgn((grad u)_ij), with sgn(0) = 0.
VertexFunction curvature_K(const Graph& g, const VertexFunction& u);

// (||(grad+ u)_i||_p, ||(grad- u)_i||_p): p-sums of the positive/negative
// parts of (grad u)_ij weighted by w_ij; p = infinity takes max_j w_ij |.|.
std::pair<double, double> updownwind_norms(const Graph& g, const VertexFunction& u, int i,
                                           double p);

// Right-hand side K+ ||grad+||_p - K- ||grad-||_p of the curvature ODE.
VertexFunction elmo_rhs(const Graph& g, const VertexFunction& u, double p);

// Explicit Euler on the curvature ODE.
Trajectory elmo_mcf_flow(const Graph& g, const VertexFunction& u0, double p, double dt,
                         int n_steps);

// Largest step that provably crosses no edge-sign kink from u (half the
// smallest flip distance along the current right-hand side).
double elmo_safe_dt(const Graph& g, const VertexFunction& u, double p);

// Max over n_dirs random directions v of
// |<-K(u), v>_V - d/dh TV(u + h v)|_{h=0}|, requiring r = 1 and u tie-free
// on edges (throws otherwise). The finite-difference step stays inside the
// smallest edge gap, where TV is exactly linear.
double tv_first_variation_check(const Graph& g, const VertexFunction& u, int n_dirs,
                                std::uint64_t seed = 0);

}  // namespace phaseflow

#endif  // PHASEFLOW_MCF_HPP
