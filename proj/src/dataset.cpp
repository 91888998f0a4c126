#include "fbfmi/dataset.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "fbfmi/errors.hpp"

namespace fbfmi {

Dataset::Dataset(Vec y_in, Mat x_in, BoolMat mask_in, std::vector<std::string> names_in)
    : y(std::move(y_in)), x(std::move(x_in)), mask(std::move(mask_in)), names(std::move(names_in)) {
  const int n = static_cast<int>(x.rows());
  const int p = static_cast<int>(x.cols());
  if (n < 1 || p < 1) fail(ErrorKind::InvalidArgument, "need at least one row and one predictor");
  if (y.size() != n) fail(ErrorKind::DimensionMismatch, "response length does not match row count");
  if (mask.rows() != n || mask.cols() != p)
    fail(ErrorKind::DimensionMismatch, "mask dimensions do not match the predictor matrix");
  if (names.size() != static_cast<size_t>(p))
    fail(ErrorKind::DimensionMismatch, "need one name per predictor column");
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(y(i)))
      fail(ErrorKind::MissingResponse, "response is missing or non-finite at row " + std::to_string(i));
  }
  // Observed cells must be usable numbers; masked cells are overwritten with
  // the NaN sentinel regardless of what the caller put there.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < p; ++j) {
      if (mask(i, j)) {
        if (!std::isfinite(x(i, j)))
          fail(ErrorKind::InvalidArgument, "observed cell (" + std::to_string(i) + ", " +
                                               names[j] + ") is not finite");
      } else {
        x(i, j) = std::numeric_limits<double>::quiet_NaN();
      }
    }
  }
}

Dataset Dataset::complete(Vec y_in, Mat x_in, std::vector<std::string> names_in) {
  BoolMat all(x_in.rows(), x_in.cols());
  all.setConstant(true);
  return Dataset(std::move(y_in), std::move(x_in), std::move(all), std::move(names_in));
}

bool Dataset::row_complete(int i) const {
  for (int j = 0; j < n_predictors(); ++j)
    if (!mask(i, j)) return false;
  return true;
}

bool Dataset::fully_observed() const { return mask.all(); }

int Dataset::missing_count() const {
  return static_cast<int>(mask.size() - mask.count());
}

std::vector<std::string> default_names(int p) {
  std::vector<std::string> names;
  names.reserve(p);
  for (int j = 0; j < p; ++j) names.push_back("x" + std::to_string(j + 1));
  return names;
}

}  // namespace fbfmi
