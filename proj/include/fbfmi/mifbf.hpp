#pragma once

#include <vector>

#include "fbfmi/fbf.hpp"
#include "fbfmi/impute.hpp"

namespace fbfmi {

enum class DensityKind { kPosterior, kFractionalPrior };

// Rubin-style log average density of the excluded coefficients at zero
// across imputations: log((1/M) sum_m exp(log pi_m(0))), summed in
// imputation order. Exactly 0 for the full model (empty exclusion set).
double averaged_log_density(const ModelIndex& gamma, const ImputationSet& imps,
                            DensityKind which, const FractionConfig& f);

// The averaging contract stripped to arithmetic: log of the ratio of the two
// density averages. Ratio of averages, never average of ratios.
double rubin_log_ratio(const std::vector<double>& log_post_densities,
                       const std::vector<double>& log_prior_densities);

// Missing-data Bayes factor of gamma against the full model: the ratio of
// the averaged posterior density to the averaged fractional-prior density,
// both at zero, both fed by the same imputations.
double mi_log_fbf(const ModelIndex& gamma, const ImputationSet& imps, const FractionConfig& f);

// Full pipeline over all 2^p models with shared per-imputation t laws.
SelectionResult select_mi(const ImputationSet& imps, const SelectOptions& opts = {});

}  // namespace fbfmi
