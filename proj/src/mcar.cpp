#include "fbfmi/mcar.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fbfmi/errors.hpp"
#include "fbfmi/rng.hpp"

namespace fbfmi {

Dataset inject_mcar(const Dataset& d, const std::vector<int>& cols, double rate, uint64_t seed) {
  if (!(rate > 0.0) || !(rate < 1.0))
    fail(ErrorKind::InvalidArgument, "missingness rate must lie strictly in (0, 1)");
  if (cols.empty()) fail(ErrorKind::InvalidArgument, "no columns to corrupt");
  for (int j : cols) {
    if (j < 0 || j >= d.n_predictors())
      fail(ErrorKind::IndexOutOfRange, "column index " + std::to_string(j) + " out of range");
    for (int i = 0; i < d.n_rows(); ++i)
      if (!d.mask(i, j))
        fail(ErrorKind::AlreadyMissing, "column " + d.names[j] + " already has missing cells");
  }

  Mat x = d.x;
  BoolMat mask = d.mask;
  Xoshiro256pp rng(derive_seed(seed, /*tag=*/0x6d636172u));
  for (int j : cols) {
    for (int i = 0; i < d.n_rows(); ++i) {
      if (rng.uniform() < rate) {
        mask(i, j) = false;
        x(i, j) = std::numeric_limits<double>::quiet_NaN();
      }
    }
  }
  return Dataset(d.y, std::move(x), std::move(mask), d.names);
}

Dataset inject_mcar(const Dataset& d, const std::vector<std::string>& col_names, double rate,
                    uint64_t seed) {
  std::vector<int> cols;
  cols.reserve(col_names.size());
  for (const auto& name : col_names) {
    const auto it = std::find(d.names.begin(), d.names.end(), name);
    if (it == d.names.end())
      fail(ErrorKind::UnknownColumn, "no predictor named '" + name + "'");
    cols.push_back(static_cast<int>(it - d.names.begin()));
  }
  return inject_mcar(d, cols, rate, seed);
}

}  // namespace fbfmi
