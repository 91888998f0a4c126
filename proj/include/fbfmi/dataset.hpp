#pragma once

#include <string>
#include <vector>

#include "fbfmi/linalg.hpp"

namespace fbfmi {

// Regression data with a per-cell observation mask over the predictors.
// The response is always fully observed; masked-out predictor cells hold
// NaN and are never read by numeric code.
struct Dataset {
  Vec y;
  Mat x;
  BoolMat mask;
  std::vector<std::string> names;

  Dataset(Vec y_in, Mat x_in, BoolMat mask_in, std::vector<std::string> names_in);

  // Fully observed data; mask all true.
  static Dataset complete(Vec y_in, Mat x_in, std::vector<std::string> names_in);

  int n_rows() const { return static_cast<int>(x.rows()); }
  int n_predictors() const { return static_cast<int>(x.cols()); }

  bool row_complete(int i) const;
  bool fully_observed() const;
  int missing_count() const;
};

std::vector<std::string> default_names(int p);

}  // namespace fbfmi
