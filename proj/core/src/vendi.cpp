#include "deckhand/eval/vendi.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace deckhand::eval {

Result<double> vendi_score(const FeatureMatrix& features) {
  const int n = features.rows;
  const int d = features.cols;
  if (n < 1 || d < 1) return Err("feature matrix is empty");

  for (int r = 0; r < n; ++r) {
    double norm_sq = 0.0;
    for (int c = 0; c < d; ++c) norm_sq += features.at(r, c) * features.at(r, c);
    if (std::abs(std::sqrt(norm_sq) - 1.0) > 1e-6)
      return Err("row " + std::to_string(r) + " is not unit-normalized");
  }

  Eigen::MatrixXd x(n, d);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < d; ++c) x(r, c) = features.at(r, c);

  const Eigen::MatrixXd kernel = (x * x.transpose()) / static_cast<double>(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(kernel);
  if (solver.info() != Eigen::Success) return Err("eigendecomposition failed");

  double entropy = 0.0;
  for (int i = 0; i < n; ++i) {
    double lambda = solver.eigenvalues()(i);
    if (lambda < 0.0) lambda = 0.0;  // numerical negatives clamp to zero
    if (lambda > 0.0) entropy -= lambda * std::log(lambda);
  }
  return std::exp(entropy);
}

}  // namespace deckhand::eval
