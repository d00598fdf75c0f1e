#include "phaseflow/graph.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace phaseflow {

int Graph::check_index(int i) const {
  if (i < 0 || i >= size()) throw std::out_of_range("vertex index out of range");
  return i;
}

Graph::Graph(Eigen::MatrixXd weights, double r) : weights_(std::move(weights)), r_(r) {
  const auto n = weights_.rows();
  if (n < 1 || weights_.cols() != n)
    throw std::invalid_argument("weight matrix must be square and non-empty");
  if (r < 0.0 || r > 1.0) throw std::invalid_argument("degree exponent r must lie in [0,1]");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (weights_(i, i) != 0.0) throw std::invalid_argument("self-loops are not allowed");
    for (Eigen::Index j = 0; j < n; ++j) {
      const double w = weights_(i, j);
      if (!std::isfinite(w) || w < 0.0)
        throw std::invalid_argument("weights must be finite and nonnegative");
      if (w != weights_(j, i)) throw std::invalid_argument("weight matrix must be symmetric");
    }
  }
  degrees_ = weights_.rowwise().sum();
  if ((degrees_.array() <= 0.0).any())
    throw std::invalid_argument("every vertex must have positive degree");

  // connectivity of the positive-weight edge set, by traversal
  std::vector<char> seen(n, 0);
  std::vector<Eigen::Index> stack{0};
  seen[0] = 1;
  Eigen::Index count = 1;
  while (!stack.empty()) {
    const Eigen::Index i = stack.back();
    stack.pop_back();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (weights_(i, j) > 0.0 && !seen[j]) {
        seen[j] = 1;
        ++count;
        stack.push_back(j);
      }
    }
  }
  if (count != n) throw std::invalid_argument("graph must be connected");

  vertex_measure_ = degrees_.array().pow(r_);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (weights_(i, j) > 0.0) edges_.push_back({i, j, weights_(i, j)});
}

std::uint64_t Graph::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const char* data, size_t len) {
    for (size_t k = 0; k < len; ++k) {
      h ^= static_cast<unsigned char>(data[k]);
      h *= 1099511628211ull;
    }
  };
  char buf[64];
  int len = std::snprintf(buf, sizeof buf, "n=%d;r=%.17g;", size(), r_);
  mix(buf, len);
  for (const Edge& e : edges_) {
    len = std::snprintf(buf, sizeof buf, "%d,%d,%.17g;", e.i, e.j, e.w);
    mix(buf, len);
  }
  return h;
}

double vertex_inner(const Graph& g, const VertexFunction& u, const VertexFunction& v) {
  if (u.size() != g.size() || v.size() != g.size())
    throw std::invalid_argument("vertex function length mismatch");
  return (u.array() * v.array() * g.vertex_measures().array()).sum();
}

double vertex_norm(const Graph& g, const VertexFunction& u) {
  return std::sqrt(vertex_inner(g, u, u));
}

double edge_inner(const Graph& g, const EdgeFunction& phi, const EdgeFunction& psi) {
  const int n = g.size();
  if (phi.rows() != n || phi.cols() != n || psi.rows() != n || psi.cols() != n)
    throw std::invalid_argument("edge function shape mismatch");
  return 0.5 * (phi.array() * psi.array() * g.weights().array()).sum();
}

EdgeFunction gradient(const Graph& g, const VertexFunction& u) {
  const int n = g.size();
  if (u.size() != n) throw std::invalid_argument("vertex function length mismatch");
  EdgeFunction phi = EdgeFunction::Zero(n, n);
  for (const auto& e : g.edges()) {
    phi(e.i, e.j) = u[e.j] - u[e.i];
    phi(e.j, e.i) = -phi(e.i, e.j);
  }
  return phi;
}

VertexFunction laplacian(const Graph& g, const VertexFunction& u) {
  if (u.size() != g.size()) throw std::invalid_argument("vertex function length mismatch");
  VertexFunction out = g.degrees().array() * u.array();
  out -= g.weights() * u;
  return out.array() / g.vertex_measures().array();
}

double dirichlet_energy(const Graph& g, const VertexFunction& u) {
  double acc = 0.0;
  for (const auto& e : g.edges()) {
    const double d = u[e.j] - u[e.i];
    acc += e.w * d * d;
  }
  return 0.5 * acc;
}

double total_variation(const Graph& g, const VertexFunction& u) {
  if (u.size() != g.size()) throw std::invalid_argument("vertex function length mismatch");
  double acc = 0.0;
  for (const auto& e : g.edges()) acc += e.w * std::abs(u[e.j] - u[e.i]);
  return acc;
}

double sup_norm(const VertexFunction& u) { return u.size() == 0 ? 0.0 : u.cwiseAbs().maxCoeff(); }

VertexFunction constant_vector(const Graph& g, double value) {
  return VertexFunction::Constant(g.size(), value);
}

VertexFunction indicator(const Graph& g, const std::vector<int>& vertices) {
  VertexFunction chi = VertexFunction::Zero(g.size());
  for (int i : vertices) {
    if (i < 0 || i >= g.size()) throw std::out_of_range("vertex index out of range");
    chi[i] = 1.0;
  }
  return chi;
}

Graph read_edge_list(std::istream& in, double r) {
  struct Entry {
    int i, j;
    double w;
  };
  std::vector<Entry> entries;
  std::set<std::pair<int, int>> seen;
  int n = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line.erase(hash_pos);
    std::istringstream ls(line);
    int i, j;
    double w;
    if (!(ls >> i)) continue;  // blank or comment-only line
    if (!(ls >> j >> w))
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": expected 'i j w'");
    std::string trailing;
    if (ls >> trailing)
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": trailing tokens");
    if (i < 0 || j < 0 || i == j)
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": invalid vertex pair");
    if (!(w > 0.0))
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": weight must be > 0");
    const auto key = std::minmax(i, j);
    if (!seen.insert(key).second)
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": duplicate edge");
    entries.push_back({i, j, w});
    n = std::max(n, std::max(i, j) + 1);
  }
  if (entries.empty()) throw std::invalid_argument("edge list is empty");
  Eigen::MatrixXd weights = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : entries) {
    weights(e.i, e.j) = e.w;
    weights(e.j, e.i) = e.w;
  }
  return Graph(std::move(weights), r);
}

Graph read_edge_list_file(const std::string& path, double r) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_edge_list(in, r);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  char buf[96];
  for (const auto& e : g.edges()) {
    std::snprintf(buf, sizeof buf, "%d %d %.17g\n", e.i, e.j, e.w);
    out << buf;
  }
}

Graph make_path(int n, double r, double w) {
  if (n < 2) throw std::invalid_argument("path needs n >= 2");
  Eigen::MatrixXd weights = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) weights(i, i + 1) = weights(i + 1, i) = w;
  return Graph(std::move(weights), r);
}

Graph make_cycle(int n, double r, double w) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Eigen::MatrixXd weights = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    weights(i, j) = weights(j, i) = w;
  }
  return Graph(std::move(weights), r);
}

Graph make_complete(int n, double r, double w) {
  if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
  Eigen::MatrixXd weights = Eigen::MatrixXd::Constant(n, n, w);
  weights.diagonal().setZero();
  return Graph(std::move(weights), r);
}

Graph make_star(int n, double r, double w) {
  if (n < 2) throw std::invalid_argument("star needs n >= 2");
  Eigen::MatrixXd weights = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) weights(0, i) = weights(i, 0) = w;
  return Graph(std::move(weights), r);
}

Graph make_two_cluster(int n, double inter, double r) {
  if (n < 4) throw std::invalid_argument("two-cluster needs n >= 4");
  if (!(inter > 0.0)) throw std::invalid_argument("inter-cluster weight must be > 0");
  const int a = (n + 1) / 2;
  Eigen::MatrixXd weights = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool same = (i < a) == (j < a);
      weights(i, j) = weights(j, i) = same ? 1.0 : inter;
    }
  return Graph(std::move(weights), r);
}

}  // namespace phaseflow
