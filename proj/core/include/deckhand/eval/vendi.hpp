#pragma once

#include <vector>

#include "deckhand/result.hpp"

namespace deckhand::eval {

/// n unit-normalized feature row vectors of dimension d, row-major.
struct FeatureMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

/// Effective diversity of the rows: exp of the Shannon entropy of the
/// eigenvalues of X.Xt/n. Ranges from 1 (all rows identical) to n (all rows
/// orthogonal). Rows must be unit-normalized.
Result<double> vendi_score(const FeatureMatrix& features);

}  // namespace deckhand::eval
