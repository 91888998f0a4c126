#include "fbfmi/fbf.hpp"

#include <cmath>
#include <string>

#include "fbfmi/errors.hpp"
#include "fbfmi/parallel.hpp"
#include "fbfmi/special.hpp"

namespace fbfmi {

namespace {
constexpr double kLogPi = 1.1447298858494001741;
constexpr int kMaxEnumerablePredictors = 25;
}  // namespace

std::vector<ModelIndex> enumerate_models(int p) {
  if (p < 1) fail(ErrorKind::InvalidArgument, "need at least one predictor");
  if (p > kMaxEnumerablePredictors)
    fail(ErrorKind::TooManyPredictors, "exhaustive enumeration is guarded at p <= " +
                                           std::to_string(kMaxEnumerablePredictors));
  std::vector<ModelIndex> models;
  models.reserve(size_t{1} << p);
  for (uint32_t bits = 0; bits < (1u << p); ++bits) models.push_back({bits, p});
  return models;
}

double savage_dickey_log_fbf(const ModelIndex& gamma, const MvT& post, const MvT& fprior) {
  if (post.dim() != fprior.dim())
    fail(ErrorKind::DimensionMismatch, "posterior and fractional prior dimensions differ");
  if (post.dim() != gamma.p + 1)
    fail(ErrorKind::DimensionMismatch, "full-model laws must cover the intercept plus " +
                                           std::to_string(gamma.p) + " predictors");
  const std::vector<int> excluded = gamma.excluded_design_indices();
  if (excluded.empty()) return 0.0;

  const Vec zero = Vec::Zero(static_cast<Eigen::Index>(excluded.size()));
  return mvt_logpdf(zero, marginal(post, excluded)) -
         mvt_logpdf(zero, marginal(fprior, excluded));
}

double log_fractional_marginal(const SuffStats& s, double b) {
  if (!(b > 0.0) || b > 1.0) fail(ErrorKind::InvalidArgument, "fraction must lie in (0, 1]");
  const double df = s.n * b - s.k;
  if (df <= 0.0)
    fail(ErrorKind::FractionTooSmall, "fraction leaves no information: n*b - k = " +
                                          std::to_string(df));
  if (s.degenerate())
    fail(ErrorKind::RankDeficient, "zero residual sum of squares; marginal likelihood undefined");
  return -0.5 * df * kLogPi - 0.5 * s.k * std::log(b) - 0.5 * chol_log_det(s.chol) +
         log_gamma(0.5 * df) - 0.5 * df * std::log(b * s.rss);
}

double direct_log_fbf(const ModelIndex& gamma, const Mat& x, const Vec& y,
                      const FractionConfig& f) {
  const SuffStats sub = fit_sufficient_stats(x, y, gamma);
  const SuffStats full = fit_sufficient_stats(x, y, ModelIndex::full_model(gamma.p));
  const double sub_ratio = log_fractional_marginal(sub, 1.0) - log_fractional_marginal(sub, f.b);
  const double full_ratio =
      log_fractional_marginal(full, 1.0) - log_fractional_marginal(full, f.b);
  return sub_ratio - full_ratio;
}

std::vector<double> posterior_model_probs(const std::vector<double>& log_fbfs, int p,
                                          ModelPrior prior) {
  const size_t expected = size_t{1} << p;
  if (log_fbfs.size() != expected)
    fail(ErrorKind::IncompleteModelSet, "expected " + std::to_string(expected) +
                                            " models, got " + std::to_string(log_fbfs.size()));

  std::vector<double> log_weighted(log_fbfs.size());
  for (uint32_t bits = 0; bits < expected; ++bits) {
    double log_w = 0.0;
    if (prior == ModelPrior::kScottBerger) {
      const int size = __builtin_popcount(bits);
      log_w = -std::log(static_cast<double>(p + 1)) - std::log(binomial(p, size));
    }
    log_weighted[bits] = log_fbfs[bits] + log_w;
  }
  const double log_norm = log_sum_exp(log_weighted);
  if (!std::isfinite(log_norm))
    fail(ErrorKind::NonFinite, "model evidence normalization is not finite");

  std::vector<double> probs(log_weighted.size());
  for (size_t i = 0; i < probs.size(); ++i) probs[i] = std::exp(log_weighted[i] - log_norm);
  return probs;
}

Vec inclusion_probs(const std::vector<double>& probs, int p) {
  const size_t expected = size_t{1} << p;
  if (probs.size() != expected)
    fail(ErrorKind::IncompleteModelSet, "expected " + std::to_string(expected) +
                                            " model probabilities");
  Vec inclusion = Vec::Zero(p);
  for (uint32_t bits = 0; bits < expected; ++bits)
    for (int j = 0; j < p; ++j)
      if ((bits >> j) & 1u) inclusion(j) += probs[bits];
  return inclusion;
}

FractionConfig resolve_fraction(int n, int p, const std::optional<double>& explicit_b) {
  const int k_full = p + 1;
  if (explicit_b) return explicit_fraction(*explicit_b);
  return minimal_fraction(n, k_full);
}

SelectionResult select_complete(const Mat& x, const Vec& y, const SelectOptions& opts) {
  const int p = static_cast<int>(x.cols());
  const FractionConfig fraction = resolve_fraction(static_cast<int>(x.rows()), p, opts.fraction_b);

  const SuffStats full = fit_sufficient_stats(x, y, ModelIndex::full_model(p));
  const MvT post = posterior_t(full);
  const MvT fprior = fractional_t(full, fraction);

  const std::vector<ModelIndex> models = enumerate_models(p);
  std::vector<double> log_fbf(models.size());
  parallel_for(static_cast<int>(models.size()), opts.threads,
               [&](int i) { log_fbf[i] = savage_dickey_log_fbf(models[i], post, fprior); });

  SelectionResult result;
  result.p = p;
  result.post_prob = posterior_model_probs(log_fbf, p, opts.prior);
  result.inclusion = inclusion_probs(result.post_prob, p);
  result.log_fbf = std::move(log_fbf);
  result.prior = opts.prior;
  result.fraction_b = fraction.b;
  return result;
}

}  // namespace fbfmi
