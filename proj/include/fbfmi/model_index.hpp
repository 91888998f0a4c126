#pragma once

#include <cstdint>
#include <vector>

namespace fbfmi {

// Bitmask over p predictors; bit j set means predictor j enters the model.
// The intercept is a nuisance present in every model and is never indexed
// here. Design coordinates place the intercept at 0 and predictor j at j+1.
struct ModelIndex {
  uint32_t bits = 0;
  int p = 0;

  static ModelIndex null_model(int p) { return {0u, p}; }
  static ModelIndex full_model(int p) {
    return {p >= 32 ? ~0u : ((1u << p) - 1u), p};
  }

  bool includes(int j) const { return (bits >> j) & 1u; }
  int size() const { return __builtin_popcount(bits); }
  bool is_full() const { return size() == p; }
  bool is_null() const { return bits == 0; }

  // Included predictor indices, ascending.
  std::vector<int> included() const {
    std::vector<int> idx;
    for (int j = 0; j < p; ++j)
      if (includes(j)) idx.push_back(j);
    return idx;
  }

  // Design-coordinate indices (intercept = 0) of the predictors this model
  // excludes; these are the coordinates pinned to zero in the density ratio.
  std::vector<int> excluded_design_indices() const {
    std::vector<int> idx;
    for (int j = 0; j < p; ++j)
      if (!includes(j)) idx.push_back(j + 1);
    return idx;
  }

  friend bool operator==(const ModelIndex& a, const ModelIndex& b) {
    return a.bits == b.bits && a.p == b.p;
  }
};

}  // namespace fbfmi
