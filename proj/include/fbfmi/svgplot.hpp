#pragma once

#include <string>
#include <vector>

#include "fbfmi/experiment.hpp"

namespace fbfmi {

// Renders one SVG per missingness rate in `summary`: grouped boxplots of the
// inclusion probabilities per variable (listwise deletion in green, imputed
// in blue) with the oracle inclusion overplotted as a red square. Variables
// that had cells deleted carry a `*` suffix on their axis label. Returns the
// paths of the files written, in rate order.
std::vector<std::string> emit_boxplot_svg(const ExperimentSummary& summary,
                                          const std::string& out_dir);

}  // namespace fbfmi
