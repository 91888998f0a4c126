#pragma once

#include <cstdint>
#include <vector>

#include "fbfmi/dataset.hpp"

namespace fbfmi {

struct GibbsConfig {
  int burn_in = 200;
  int spacing = 50;
  int m = 20;
  uint64_t seed = 0;
};

// M completed copies of the predictor matrix, drawn from the posterior
// predictive of the missing cells given everything observed. The response
// never changes and is stored once.
struct ImputationSet {
  std::vector<Mat> completed;
  Vec y;
  GibbsConfig config;

  int m() const { return static_cast<int>(completed.size()); }
  int n_rows() const { return completed.empty() ? 0 : static_cast<int>(completed[0].rows()); }
  int n_predictors() const {
    return completed.empty() ? 0 : static_cast<int>(completed[0].cols());
  }
};

// Data-augmentation Gibbs sampler on the joint vector (x_1..x_p, y) under a
// multivariate normal model with the |Sigma|^{-(d+1)/2} noninformative prior:
// alternate normal-inverse-Wishart parameter draws with row-wise Gaussian
// conditional draws of the missing coordinates. Deterministic given the seed.
ImputationSet impute(const Dataset& d, const GibbsConfig& cfg);

struct CompleteData {
  Mat x;
  Vec y;
  std::vector<int> kept_rows;  // original row indices, order preserved
};

// Rows with every predictor observed. Errors when too few rows survive to
// fit the full model with a proper minimal fraction.
CompleteData listwise_delete(const Dataset& d);

}  // namespace fbfmi
