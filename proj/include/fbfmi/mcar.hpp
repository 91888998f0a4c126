#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fbfmi/dataset.hpp"

namespace fbfmi {

// Marks cells in the given predictor columns missing, each independently
// with probability rate. Cells are visited column by column in the order
// given, rows ascending, so one seed pins one mask. The response is never
// touched. The target columns must be fully observed beforehand.
Dataset inject_mcar(const Dataset& d, const std::vector<int>& cols, double rate, uint64_t seed);

// Name-based convenience over the column-index form.
Dataset inject_mcar(const Dataset& d, const std::vector<std::string>& col_names, double rate,
                    uint64_t seed);

}  // namespace fbfmi
