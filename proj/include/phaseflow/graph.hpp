// Finite weighted graphs and the discrete vertex/edge calculus built on them:
// degree-weighted inner products, gradient, Laplacian, Dirichlet energy and
// total variation. All desk-scale, dense storage.
#ifndef PHASEFLOW_GRAPH_HPP
#define PHASEFLOW_GRAPH_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace phaseflow {

// Real function on vertices, indexed 0..n-1.
using VertexFunction = Eigen::VectorXd;

// Antisymmetric real function on ordered vertex pairs; zero off edges.
using EdgeFunction = Eigen::MatrixXd;

// Finite, undirected, weighted, simple, connected graph with a degree
// exponent r in [0,1] selecting the vertex measure d_i^r (r=0 unnormalised
// Laplacian, r=1 random-walk Laplacian).
class Graph {
 public:
  // Throws std::invalid_argument unless `weights` is square, symmetric,
  // entrywise nonnegative with zero diagonal, every degree is positive and
  // the positive-weight edge set is connected.
  Graph(Eigen::MatrixXd weights, double r);

  int size() const { return static_cast<int>(weights_.rows()); }
  double r() const { return r_; }
  const Eigen::MatrixXd& weights() const { return weights_; }
  double weight(int i, int j) const { return weights_(i, j); }
  bool has_edge(int i, int j) const { return weights_(i, j) > 0.0; }

  double degree(int i) const { return degrees_[check_index(i)]; }
  const VertexFunction& degrees() const { return degrees_; }
  // d_i^r, the vertex measure.
  double vertex_measure(int i) const { return vertex_measure_[check_index(i)]; }
  const VertexFunction& vertex_measures() const { return vertex_measure_; }
  double min_vertex_measure() const { return vertex_measure_.minCoeff(); }
  // <1,1>_V = sum_i d_i^r
  double total_measure() const { return vertex_measure_.sum(); }

  // Undirected edges as (i, j, w) with i < j, ordered lexicographically.
  struct Edge {
    int i, j;
    double w;
  };
  const std::vector<Edge>& edges() const { return edges_; }

  // FNV-1a hash of the canonical (n, r, edge list) serialisation.
  std::uint64_t hash() const;

 private:
  int check_index(int i) const;

  Eigen::MatrixXd weights_;
  double r_;
  VertexFunction degrees_;
  VertexFunction vertex_measure_;
  std::vector<Edge> edges_;
};

// <u,v>_V = sum_i u_i v_i d_i^r. Throws on length mismatch.
double vertex_inner(const Graph& g, const VertexFunction& u,
                    const VertexFunction& v);
double vertex_norm(const Graph& g, const VertexFunction& u);

// <phi,psi>_E = 1/2 sum_{i,j} phi_ij psi_ij w_ij.
double edge_inner(const Graph& g, const EdgeFunction& phi,
                  const EdgeFunction& psi);

// (grad u)_ij = u_j - u_i on edges, 0 otherwise.
EdgeFunction gradient(const Graph& g, const VertexFunction& u);

// (Lap u)_i = d_i^{-r} sum_j w_ij (u_i - u_j). Positive semi-definite in
// <.,.>_V, kernel contains constants.
VertexFunction laplacian(const Graph& g, const VertexFunction& u);

// 1/2 ||grad u||_E^2, the first term of the Ginzburg-Landau energy.
double dirichlet_energy(const Graph& g, const VertexFunction& u);

// TV(u) = 1/2 sum_{i,j} w_ij |u_i - u_j|.
double total_variation(const Graph& g, const VertexFunction& u);

// max_i |u_i|
double sup_norm(const VertexFunction& u);

VertexFunction constant_vector(const Graph& g, double value);
// Indicator of a vertex set given as a membership mask.
VertexFunction indicator(const Graph& g, const std::vector<int>& vertices);

// --- edge-list text format ------------------------------------------------
// Lines "i j w" with 0-based indices and w > 0; '#' starts a comment.
// Symmetric closure is applied; a repeated unordered pair is an error.
Graph read_edge_list(std::istream& in, double r);
Graph read_edge_list_file(const std::string& path, double r);
void write_edge_list(std::ostream& out, const Graph& g);

// --- generators -------------------------------------------------------------
Graph make_path(int n, double r, double w = 1.0);
Graph make_cycle(int n, double r, double w = 1.0);
Graph make_complete(int n, double r, double w = 1.0);
// Star with vertex 0 as the centre and n-1 leaves.
Graph make_star(int n, double r, double w = 1.0);
// Two complete unit-weight clusters of sizes ceil(n/2), floor(n/2), joined by
// all inter-cluster pairs with weight `inter`.
Graph make_two_cluster(int n, double inter, double r);

}  // namespace phaseflow

#endif  // PHASEFLOW_GRAPH_HPP
