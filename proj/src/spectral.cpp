#include "phaseflow/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace phaseflow {

SpectralDecomposition::SpectralDecomposition(const Graph& g) {
  const int n = g.size();
  // Lap = D^{-r}(D - A) = D^{-r/2} M D^{r/2} with M symmetric.
  const Eigen::ArrayXd half = g.vertex_measures().array().sqrt();
  Eigen::MatrixXd m = Eigen::MatrixXd(g.degrees().asDiagonal()) - g.weights();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) /= half[i] * half[j];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition of the graph Laplacian failed");

  eigenvalues_ = solver.eigenvalues();
  // Clamp the roundoff negatives; the Laplacian is PSD with kernel = constants.
  const double snap = 1e-12 * std::max(1.0, eigenvalues_.cwiseAbs().maxCoeff());
  for (int k = 0; k < n; ++k)
    if (eigenvalues_[k] < snap) eigenvalues_[k] = std::max(eigenvalues_[k], 0.0);
  if (eigenvalues_[0] < snap) eigenvalues_[0] = 0.0;

  from_spectral_ = solver.eigenvectors();
  to_spectral_ = solver.eigenvectors().transpose();
  for (int i = 0; i < n; ++i) {
    from_spectral_.row(i) /= half[i];
    to_spectral_.col(i) *= half[i];
  }
}

VertexFunction SpectralDecomposition::apply_filter(const std::function<double(double)>& f,
                                                   const VertexFunction& u) const {
  if (u.size() != size()) throw std::invalid_argument("vertex function length mismatch");
  Eigen::VectorXd coeffs = to_spectral_ * u;
  for (int k = 0; k < size(); ++k) coeffs[k] *= f(eigenvalues_[k]);
  return from_spectral_ * coeffs;
}

VertexFunction SpectralDecomposition::heat_apply(double t, const VertexFunction& u) const {
  if (t < 0.0) throw std::invalid_argument("diffusion time must be nonnegative");
  if (t == 0.0) return u;
  return apply_filter([t](double lam) { return std::exp(-t * lam); }, u);
}

VertexFunction SpectralDecomposition::drift_apply(double eps, double t,
                                                  const VertexFunction& u) const {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (t < 0.0) throw std::invalid_argument("time must be nonnegative");
  if (t == 0.0) return u;
  return apply_filter([eps, t](double lam) { return std::exp(t * (1.0 / eps - lam)); }, u);
}

VertexFunction SpectralDecomposition::laplacian_apply(const VertexFunction& u) const {
  return apply_filter([](double lam) { return lam; }, u);
}

}  // namespace phaseflow
