#pragma once

#include <optional>
#include <vector>

#include "fbfmi/linmodel.hpp"
#include "fbfmi/model_index.hpp"
#include "fbfmi/mvt.hpp"

namespace fbfmi {

enum class ModelPrior { kUniform, kScottBerger };

// Per-model evidence and the quantities derived from it. Vectors are indexed
// by the model bitmask, so entry 0 is the intercept-only model and entry
// 2^p - 1 the full model.
struct SelectionResult {
  int p = 0;
  std::vector<double> log_fbf;    // log B_{gamma, full}; exactly 0 at the full model
  std::vector<double> post_prob;  // sums to 1
  Vec inclusion;                  // per-predictor posterior inclusion probability
  ModelPrior prior = ModelPrior::kUniform;
  double fraction_b = 1.0;        // resolved likelihood fraction
};

// All 2^p bitmasks in ascending integer order; guarded at p <= 25.
std::vector<ModelIndex> enumerate_models(int p);

// log B_{gamma, full} as the posterior-to-fractional-prior density ratio of
// the excluded coefficients at zero, both laws living under the full model.
double savage_dickey_log_fbf(const ModelIndex& gamma, const MvT& post, const MvT& fprior);

// Closed-form log marginal likelihood of one model when the likelihood is
// raised to b under the sigma^{-2} baseline prior (b-only constants dropped;
// they cancel in every Bayes-factor ratio).
double log_fractional_marginal(const SuffStats& s, double b);

// Independent route to the same Bayes factor: the double ratio of marginal
// likelihoods, each computed from its own model fit.
double direct_log_fbf(const ModelIndex& gamma, const Mat& x, const Vec& y,
                      const FractionConfig& f);

// Normalizes exp(log_fbf) * prior weight over the complete model list.
// Scott-Berger weights: 1 / ((p+1) * C(p, model size)).
std::vector<double> posterior_model_probs(const std::vector<double>& log_fbfs, int p,
                                          ModelPrior prior);

// Component j sums the probabilities of every model including predictor j.
Vec inclusion_probs(const std::vector<double>& probs, int p);

struct SelectOptions {
  ModelPrior prior = ModelPrior::kUniform;
  // Explicit likelihood fraction; unset means the minimal fraction computed
  // from the full design.
  std::optional<double> fraction_b;
  int threads = 1;
};

// Complete-data pipeline: one fraction from the full design, full-model
// posterior and fractional-prior t laws, then one density ratio per model.
SelectionResult select_complete(const Mat& x, const Vec& y, const SelectOptions& opts = {});

// Resolves the fraction the same way select_complete does.
FractionConfig resolve_fraction(int n, int p, const std::optional<double>& explicit_b);

}  // namespace fbfmi
