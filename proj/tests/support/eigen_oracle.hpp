#pragma once

// Brute-force spectral oracle for the diversity tests. Deliberately
// independent of the library implementation: plain Jacobi rotations on the
// explicitly formed kernel, no Eigen.

#include <cmath>
#include <vector>

#include "deckhand/eval/vendi.hpp"

namespace oracle {

inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-18) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a[i][i];
  return eigenvalues;
}

inline double vendi_oracle(const deckhand::eval::FeatureMatrix& x) {
  const int n = x.rows;
  std::vector<std::vector<double>> kernel(static_cast<std::size_t>(n),
                                          std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double dot = 0.0;
      for (int c = 0; c < x.cols; ++c) dot += x.at(i, c) * x.at(j, c);
      kernel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dot / n;
    }
  }
  double entropy = 0.0;
  for (double lambda : jacobi_eigenvalues(std::move(kernel))) {
    if (lambda > 0.0) entropy -= lambda * std::log(lambda);
  }
  return std::exp(entropy);
}

}  // namespace oracle
