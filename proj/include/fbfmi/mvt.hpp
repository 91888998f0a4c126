#pragma once

#include <vector>

#include "fbfmi/linalg.hpp"

namespace fbfmi {

// Multivariate Student-t parameter triple (location, scale matrix, df).
// Construction validates symmetry-positive-definiteness of the scale and
// nu > 0.
struct MvT {
  Vec mu;
  Mat sigma;
  double nu = 1.0;

  MvT(Vec mu_in, Mat sigma_in, double nu_in);
  int dim() const { return static_cast<int>(mu.size()); }
};

// Standard multivariate-t log density at x. All work goes through the
// Cholesky factor of sigma; the scale matrix is never inverted explicitly.
double mvt_logpdf(const Vec& x, const MvT& t);

// Marginal over the kept coordinates: same df, sub-blocks of mu and sigma.
// Coordinate order follows `keep`.
MvT marginal(const MvT& t, const std::vector<int>& keep);

}  // namespace fbfmi
