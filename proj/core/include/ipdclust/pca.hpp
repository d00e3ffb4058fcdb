#pragma once

#include <vector>

#include "ipdclust/types.hpp"

namespace ipdclust {

struct Pca2 {
  std::vector<double> projection;  // n*2 row-major scores
  double fraction1 = 0.0;          // variance fractions, non-increasing
  double fraction2 = 0.0;
  std::vector<double> component1;  // unit-norm loadings, size p
  std::vector<double> component2;
};

// Projection onto the top-2 principal directions of the column-centered data.
// p <= 500: cyclic Jacobi on the sample covariance to off-diagonal norm below
// 1e-10. p > 500: orthogonal power iteration (tolerance 1e-9, deterministic
// start e1/e2) without forming the covariance. Sign convention: the
// largest-magnitude loading of each component is positive. Errors: p < 2 or
// n < 2; DegenerateDataError on zero-variance data.
Pca2 pca2(const DataMatrix& data);

}  // namespace ipdclust
