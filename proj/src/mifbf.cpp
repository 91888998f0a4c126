#include "fbfmi/mifbf.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fbfmi/errors.hpp"
#include "fbfmi/parallel.hpp"
#include "fbfmi/special.hpp"

namespace fbfmi {

namespace {

// Full-model posterior and fractional-prior t laws, one pair per imputation.
struct ImputationLaws {
  std::vector<MvT> posts;
  std::vector<MvT> fpriors;
  int p = 0;
};

ImputationLaws build_laws(const ImputationSet& imps, const FractionConfig& f) {
  if (imps.m() < 1) fail(ErrorKind::InvalidArgument, "imputation set is empty");
  ImputationLaws laws;
  laws.p = imps.n_predictors();
  laws.posts.reserve(imps.m());
  laws.fpriors.reserve(imps.m());
  const ModelIndex full = ModelIndex::full_model(laws.p);
  for (int m = 0; m < imps.m(); ++m) {
    const SuffStats s = fit_sufficient_stats(imps.completed[m], imps.y, full);
    laws.posts.push_back(posterior_t(s));
    laws.fpriors.push_back(fractional_t(s, f));
  }
  return laws;
}

// Log density of the excluded block at zero for every imputation, then the
// log average. Any upstream failure or non-finite density aborts the model.
double averaged_from_laws(const ModelIndex& gamma, const std::vector<MvT>& laws) {
  const std::vector<int> excluded = gamma.excluded_design_indices();
  if (excluded.empty()) return 0.0;
  const Vec zero = Vec::Zero(static_cast<Eigen::Index>(excluded.size()));

  std::vector<double> log_densities(laws.size());
  for (size_t m = 0; m < laws.size(); ++m) {
    log_densities[m] = mvt_logpdf(zero, marginal(laws[m], excluded));
    if (!std::isfinite(log_densities[m]))
      fail(ErrorKind::NonFinite, "log density for imputation " + std::to_string(m) +
                                     " is not finite");
  }
  return log_mean_exp(log_densities);
}

}  // namespace

double averaged_log_density(const ModelIndex& gamma, const ImputationSet& imps,
                            DensityKind which, const FractionConfig& f) {
  const ImputationLaws laws = build_laws(imps, f);
  return averaged_from_laws(gamma,
                            which == DensityKind::kPosterior ? laws.posts : laws.fpriors);
}

double rubin_log_ratio(const std::vector<double>& log_post_densities,
                       const std::vector<double>& log_prior_densities) {
  if (log_post_densities.size() != log_prior_densities.size() || log_post_densities.empty())
    fail(ErrorKind::InvalidArgument, "need matching nonempty density lists");
  return log_mean_exp(log_post_densities) - log_mean_exp(log_prior_densities);
}

double mi_log_fbf(const ModelIndex& gamma, const ImputationSet& imps, const FractionConfig& f) {
  if (gamma.is_full()) return 0.0;
  const ImputationLaws laws = build_laws(imps, f);
  return averaged_from_laws(gamma, laws.posts) - averaged_from_laws(gamma, laws.fpriors);
}

SelectionResult select_mi(const ImputationSet& imps, const SelectOptions& opts) {
  const int p = imps.n_predictors();
  const FractionConfig fraction = resolve_fraction(imps.n_rows(), p, opts.fraction_b);
  const ImputationLaws laws = build_laws(imps, fraction);

  const std::vector<ModelIndex> models = enumerate_models(p);
  std::vector<double> log_fbf(models.size());
  parallel_for(static_cast<int>(models.size()), opts.threads, [&](int i) {
    log_fbf[i] = models[i].is_full() ? 0.0
                                     : averaged_from_laws(models[i], laws.posts) -
                                           averaged_from_laws(models[i], laws.fpriors);
  });

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
