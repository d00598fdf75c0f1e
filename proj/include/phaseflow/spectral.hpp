// Exact graph heat semigroup e^{-t Lap} through a dense eigendecomposition.
// For r > 0 the Laplacian is similar to a symmetric matrix via the degree
// weights, so the spectrum is real and the transforms are numerically exact.
#ifndef PHASEFLOW_SPECTRAL_HPP
#define PHASEFLOW_SPECTRAL_HPP

#include <functional>

#include "phaseflow/graph.hpp"

namespace phaseflow {

class SpectralDecomposition {
 public:
  // Throws std::runtime_error on eigensolver failure.
  explicit SpectralDecomposition(const Graph& g);

  int size() const { return static_cast<int>(eigenvalues_.size()); }
  // Ascending, nonnegative; eigenvalue 0 belongs to the constants.
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  // ||Lap|| = max eigenvalue (self-adjoint in <.,.>_V).
  double operator_norm() const { return eigenvalues_[size() - 1]; }
  // Smallest nonzero eigenvalue.
  double spectral_gap() const { return eigenvalues_[1]; }

  // e^{-t Lap} u, t >= 0 (throws on negative t).
  VertexFunction heat_apply(double t, const VertexFunction& u) const;

  // e^{t A} u with A = (1/eps) I - Lap, i.e. e^{t/eps} e^{-t Lap} u.
  VertexFunction drift_apply(double eps, double t, const VertexFunction& u) const;

  // f(Lap) u for a scalar function applied to the eigenvalues.
  VertexFunction apply_filter(const std::function<double(double)>& f,
                              const VertexFunction& u) const;

  // Lap u reconstructed from the decomposition (testing aid).
  VertexFunction laplacian_apply(const VertexFunction& u) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd from_spectral_;  // D^{-r/2} Q
  Eigen::MatrixXd to_spectral_;    // Q^T D^{r/2}
};

}  // namespace phaseflow

#endif  // PHASEFLOW_SPECTRAL_HPP
