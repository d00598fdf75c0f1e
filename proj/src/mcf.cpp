#include "phaseflow/mcf.hpp"

#include <cmath>
#include <deque>
#include <iostream>
#include <limits>
#include <queue>
#include <stdexcept>

#include "phaseflow/rng.hpp"

namespace phaseflow {

namespace {

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// smaller symmetric difference from the reference set, then lexicographically
// smaller membership vector
bool tie_prefer(const VertexSet& a, const VertexSet& b, const VertexSet& ref) {
  int da = 0, db = 0;
  for (int i = 0; i < ref.size(); ++i) {
    da += a.membership[i] != ref.membership[i];
    db += b.membership[i] != ref.membership[i];
  }
  if (da != db) return da < db;
  return a.membership < b.membership;
}

VertexSet set_from_mask(int n, std::uint32_t mask) {
  VertexSet s(n);
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) s.membership[i] = 1;
  return s;
}

double cut_weight(const Graph& g, const VertexSet& s) {
  double acc = 0.0;
  for (const auto& e : g.edges())
    if (s.membership[e.i] != s.membership[e.j]) acc += e.w;
  return acc;
}

// objective(cand, best) may return +infinity early once a partial sum (a
// lower bound, TV >= 0) already exceeds the incumbent
template <typename Objective>
VertexSet argmin_over_subsets(const Graph& g, const VertexSet& ref, int exhaustive_limit,
                              Objective objective) {
  const int n = g.size();
  if (n > exhaustive_limit)
    throw std::invalid_argument("graph too large for exhaustive subset search");
  double best = kInfinity;
  VertexSet best_set;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet cand = set_from_mask(n, mask);
    const double val = objective(cand, best);
    if (!(val < kInfinity)) continue;
    if (best == kInfinity) {
      best = val;
      best_set = cand;
      continue;
    }
    const double tie_tol = 1e-12 * std::max(1.0, std::abs(best));
    if (val < best - tie_tol) {
      best = val;
      best_set = cand;
    } else if (val <= best + tie_tol && tie_prefer(cand, best_set, ref)) {
      best_set = cand;
    }
  }
  return best_set;
}

}  // namespace

VertexSet VertexSet::from_indicator(const VertexFunction& chi) {
  VertexSet s(static_cast<int>(chi.size()));
  for (int i = 0; i < chi.size(); ++i) {
    if (chi[i] == 1.0)
      s.membership[i] = 1;
    else if (chi[i] != 0.0)
      throw std::invalid_argument("indicator must be exactly binary");
  }
  return s;
}

VertexFunction VertexSet::to_indicator() const {
  VertexFunction chi = VertexFunction::Zero(size());
  for (int i = 0; i < size(); ++i) chi[i] = membership[i] ? 1.0 : 0.0;
  return chi;
}

int VertexSet::count() const {
  int c = 0;
  for (char m : membership) c += m != 0;
  return c;
}

VertexSet boundary_set(const Graph& g, const VertexSet& s) {
  if (s.size() != g.size()) throw std::invalid_argument("vertex set size mismatch");
  VertexSet sigma(g.size());
  for (const auto& e : g.edges())
    if (s.membership[e.i] != s.membership[e.j]) {
      sigma.membership[e.i] = 1;
      sigma.membership[e.j] = 1;
    }
  return sigma;
}

VertexFunction graph_distance_to(const Graph& g, const VertexSet& sigma, bool weighted) {
  if (sigma.size() != g.size()) throw std::invalid_argument("vertex set size mismatch");
  const int n = g.size();
  const double inf = std::numeric_limits<double>::infinity();
  VertexFunction dist = VertexFunction::Constant(n, inf);
  if (!weighted) {
    std::deque<int> queue;
    for (int i = 0; i < n; ++i)
      if (sigma.contains(i)) {
        dist[i] = 0.0;
        queue.push_back(i);
      }
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j)
        if (g.has_edge(i, j) && dist[j] == inf) {
          dist[j] = dist[i] + 1.0;
          queue.push_back(j);
        }
    }
    return dist;
  }
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  for (int i = 0; i < n; ++i)
    if (sigma.contains(i)) {
      dist[i] = 0.0;
      heap.push({0.0, i});
    }
  while (!heap.empty()) {
    const auto [d, i] = heap.top();
    heap.pop();
    if (d > dist[i]) continue;
    for (int j = 0; j < n; ++j)
      if (g.has_edge(i, j) && d + g.weight(i, j) < dist[j]) {
        dist[j] = d + g.weight(i, j);
        heap.push({dist[j], j});
      }
  }
  return dist;
}

VertexSet vggob_mcf_step(const Graph& g, const VertexSet& s, double dt,
                         int exhaustive_limit) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const VertexSet sigma = boundary_set(g, s);
  const VertexFunction dist = graph_distance_to(g, sigma);
  return argmin_over_subsets(g, s, exhaustive_limit,
                             [&](const VertexSet& cand, double best) {
    double penalty = 0.0;
    for (int i = 0; i < g.size(); ++i)
      if (cand.membership[i] != s.membership[i]) {
        if (std::isinf(dist[i])) return kInfinity;
        penalty += dist[i] * g.vertex_measure(i);
      }
    penalty /= dt;
    if (penalty > best) return kInfinity;  // TV >= 0 cannot recover
    return cut_weight(g, cand) + penalty;
  });
}

Graph augment_complete(const Graph& g, double eps) {
  if (eps <= 0.0) {
    std::cerr << "augment_complete: eps must be positive, returning graph unchanged\n";
    return g;
  }
  Eigen::MatrixXd weights = g.weights();
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      if (i != j && weights(i, j) == 0.0) weights(i, j) = eps;
  return Graph(std::move(weights), g.r());
}

VertexSet new_mcf_step(const Graph& g, const SpectralDecomposition& dec, const VertexSet& s,
                       double tau, int exhaustive_limit) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  const VertexFunction chi = s.to_indicator();
  return argmin_over_subsets(g, s, exhaustive_limit,
                             [&](const VertexSet& cand, double best) {
    const double tv = cut_weight(g, cand);
    if (tv > best) return kInfinity;  // the smoothed seminorm cannot recover
    const VertexFunction smoothed = dec.heat_apply(0.5 * tau, cand.to_indicator() - chi);
    return tv + vertex_inner(g, smoothed, smoothed) / tau;
  });
}

VertexFunction curvature_K(const Graph& g, const VertexFunction& u) {
  if (u.size() != g.size()) throw std::invalid_argument("vertex function length mismatch");
  VertexFunction k = VertexFunction::Zero(g.size());
  for (const auto& e : g.edges()) {
    const double s = sgn(u[e.j] - u[e.i]);
    k[e.i] += e.w / g.degree(e.i) * s;
    k[e.j] -= e.w / g.degree(e.j) * s;
  }
  return k;
}

std::pair<double, double> updownwind_norms(const Graph& g, const VertexFunction& u, int i,
                                           double p) {
  if (u.size() != g.size()) throw std::invalid_argument("vertex function length mismatch");
  if (i < 0 || i >= g.size()) throw std::out_of_range("vertex index out of range");
  if (!(p >= 1.0)) throw std::invalid_argument("p must lie in [1,infinity]");
  double plus = 0.0, minus = 0.0;
  const bool inf_norm = std::isinf(p);
  for (int j = 0; j < g.size(); ++j) {
    const double w = g.weight(i, j);
    if (w == 0.0) continue;
    const double grad = u[j] - u[i];
    const double pos = grad > 0.0 ? grad : 0.0;
    const double neg = grad < 0.0 ? -grad : 0.0;
    if (inf_norm) {
      plus = std::max(plus, w * pos);
      minus = std::max(minus, w * neg);
    } else {
      plus += w * std::pow(pos, p);
      minus += w * std::pow(neg, p);
    }
  }
  if (!inf_norm) {
    plus = std::pow(plus, 1.0 / p);
    minus = std::pow(minus, 1.0 / p);
  }
  return {plus, minus};
}

VertexFunction elmo_rhs(const Graph& g, const VertexFunction& u, double p) {
  const VertexFunction k = curvature_K(g, u);
  VertexFunction rhs(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const auto [plus, minus] = updownwind_norms(g, u, i, p);
    const double kp = k[i] > 0.0 ? k[i] : 0.0;
    const double km = k[i] < 0.0 ? -k[i] : 0.0;
    rhs[i] = kp * plus - km * minus;
  }
  return rhs;
}

Trajectory elmo_mcf_flow(const Graph& g, const VertexFunction& u0, double p, double dt,
                         int n_steps) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  Trajectory traj;
  traj.scheme_tag = "elmo-mcf";
  traj.times.push_back(0.0);
  traj.states.push_back(u0);
  VertexFunction u = u0;
  for (int k = 1; k <= n_steps; ++k) {
    u += dt * elmo_rhs(g, u, p);
    traj.times.push_back(k * dt);
    traj.states.push_back(u);
  }
  return traj;
}

double elmo_safe_dt(const Graph& g, const VertexFunction& u, double p) {
  const VertexFunction rhs = elmo_rhs(g, u, p);
  double safe = kInfinity;
  for (const auto& e : g.edges()) {
    const double gap = u[e.j] - u[e.i];
    const double closing = rhs[e.i] - rhs[e.j];
    if (gap != 0.0 && sgn(closing) == sgn(gap) && closing != 0.0)
      safe = std::min(safe, std::abs(gap) / std::abs(closing));
  }
  return 0.5 * safe;
}

double tv_first_variation_check(const Graph& g, const VertexFunction& u, int n_dirs,
                                std::uint64_t seed) {
  if (g.r() != 1.0)
    throw std::invalid_argument("the TV first-variation identity needs r = 1");
  double min_gap = kInfinity;
  for (const auto& e : g.edges()) min_gap = std::min(min_gap, std::abs(u[e.j] - u[e.i]));
  if (!(min_gap > 0.0))
    throw std::invalid_argument("u must have no equal neighbour values");
  const VertexFunction k = curvature_K(g, u);
  Rng rng(seed);
  double worst = 0.0;
  for (int d = 0; d < n_dirs; ++d) {
    VertexFunction v(g.size());
    for (int i = 0; i < g.size(); ++i) v[i] = rng.uniform(-1.0, 1.0);
    const double h = std::min(1e-3, 0.25 * min_gap / std::max(1.0, sup_norm(v)));
    const double fd =
        (total_variation(g, u + h * v) - total_variation(g, u - h * v)) / (2.0 * h);
    worst = std::max(worst, std::abs(vertex_inner(g, -k, v) - fd));
  }
  return worst;
}

}  // namespace phaseflow
