#include <cmath>
#include <vector>

#include "doctest.h"
#include "fbfmi/errors.hpp"
#include "fbfmi/mifbf.hpp"
#include "fbfmi/mcar.hpp"
#include "oracles.hpp"

using namespace fbfmi;

namespace {

ImputationSet copies_of(const Mat& x, const Vec& y, int m) {
  ImputationSet imps;
  imps.y = y;
  for (int i = 0; i < m; ++i) imps.completed.push_back(x);
  return imps;
}

}  // namespace

TEST_CASE("the averaging order is ratio-of-averages, never average-of-ratios") {
  // Hand-constructed example: posterior densities (0.2, 0.4), fractional
  // prior densities (0.1, 0.4). Ratio of averages: 0.3/0.25 = 1.2. The
  // average of the per-imputation ratios (2 and 1) would be 1.5.
  const std::vector<double> post = {std::log(0.2), std::log(0.4)};
  const std::vector<double> prior = {std::log(0.1), std::log(0.4)};
  const double got = rubin_log_ratio(post, prior);
  CHECK(got == doctest::Approx(0.18232155679395463).epsilon(1e-12));
  CHECK(std::fabs(got - std::log(1.5)) > 0.2);

  // The degenerate case where both orders coincide: prior densities equal.
  const std::vector<double> flat = {std::log(0.1), std::log(0.1)};
  CHECK(rubin_log_ratio(post, flat) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("zero missingness reduces the MI factor to the complete-data one") {
  const auto prob = oracle::make_problem(30, 3, 41);
  const SelectionResult complete = select_complete(prob.x, prob.y);
  const FractionConfig f = resolve_fraction(30, 3, std::nullopt);

  for (int m : {1, 5, 20}) {
    const ImputationSet imps = copies_of(prob.x, prob.y, m);
    for (const ModelIndex& gamma : enumerate_models(3)) {
      CHECK(std::fabs(mi_log_fbf(gamma, imps, f) - complete.log_fbf[gamma.bits]) <= 1e-12);
    }
  }
}

TEST_CASE("full model always maps to exactly zero") {
  const auto prob = oracle::make_problem(20, 2, 43);
  const ImputationSet imps = copies_of(prob.x, prob.y, 3);
  const FractionConfig f = resolve_fraction(20, 2, std::nullopt);
  CHECK(mi_log_fbf(ModelIndex::full_model(2), imps, f) == 0.0);
  CHECK(averaged_log_density(ModelIndex::full_model(2), imps, DensityKind::kPosterior, f) ==
        0.0);
}

TEST_CASE("averaged density with a single imputation is the plain density") {
  const auto prob = oracle::make_problem(22, 2, 47);
  const ImputationSet one = copies_of(prob.x, prob.y, 1);
  const FractionConfig f = resolve_fraction(22, 2, std::nullopt);
  const SelectionResult complete = select_complete(prob.x, prob.y);
  for (const ModelIndex& gamma : enumerate_models(2)) {
    CHECK(std::fabs(mi_log_fbf(gamma, one, f) - complete.log_fbf[gamma.bits]) <= 1e-13);
  }
}

TEST_CASE("select_mi agrees with per-model mi_log_fbf and normalizes") {
  // Real missing data this time.
  const auto prob = oracle::make_problem(45, 3, 53);
  Dataset d = Dataset::complete(prob.y, prob.x, default_names(3));
  d = inject_mcar(d, std::vector<int>{0, 2}, 0.15, 99);

  GibbsConfig cfg;
  cfg.burn_in = 60;
  cfg.spacing = 5;
  cfg.m = 8;
  cfg.seed = 4242;
  const ImputationSet imps = impute(d, cfg);

  const SelectionResult res = select_mi(imps);
  const FractionConfig f = resolve_fraction(45, 3, std::nullopt);
  for (const ModelIndex& gamma : enumerate_models(3)) {
    CHECK(res.log_fbf[gamma.bits] ==
          doctest::Approx(mi_log_fbf(gamma, imps, f)).epsilon(1e-12));
  }
  double total = 0.0;
  for (double v : res.post_prob) total += v;
  CHECK(std::fabs(total - 1.0) < 1e-12);
  for (int j = 0; j < 3; ++j) {
    CHECK(res.inclusion(j) >= 0.0);
    CHECK(res.inclusion(j) <= 1.0);
  }

  // Thread count never changes the bits.
  SelectOptions four;
  four.threads = 4;
  const SelectionResult par = select_mi(imps, four);
  for (std::size_t i = 0; i < res.log_fbf.size(); ++i)
    CHECK(par.log_fbf[i] == res.log_fbf[i]);
}

TEST_CASE("MI factors stabilize as the number of imputations grows") {
  // Prefixes of one long chain realize "same seed, longer run" exactly; the
  // per-chain deviation trajectory is Monte-Carlo noisy, so the deviations
  // from each chain's M=320 reference are averaged over four independent
  // chains. The aggregate must shrink in at least 3 of the 4 consecutive
  // comparisons along M = 10,20,40,80,160 and at least halve end to end.
  const auto prob = oracle::make_problem(60, 3, 59);
  Dataset d = Dataset::complete(prob.y, prob.x, default_names(3));
  d = inject_mcar(d, std::vector<int>{0, 1}, 0.15, 7);
  const FractionConfig f = resolve_fraction(60, 3, std::nullopt);
  const auto models = enumerate_models(3);

  const std::vector<int> sizes = {10, 20, 40, 80, 160};
  std::vector<double> dev(sizes.size(), 0.0);
  for (uint64_t seed : {11u, 12u, 13u, 14u}) {
    GibbsConfig cfg;
    cfg.burn_in = 100;
    cfg.spacing = 5;
    cfg.m = 320;
    cfg.seed = seed;
    const ImputationSet chain = impute(d, cfg);

    auto all_factors = [&](int m) {
      ImputationSet prefix;
      prefix.y = chain.y;
      prefix.completed.assign(chain.completed.begin(), chain.completed.begin() + m);
      std::vector<double> lf;
      for (const ModelIndex& gamma : models) lf.push_back(mi_log_fbf(gamma, prefix, f));
      return lf;
    };

    const std::vector<double> reference = all_factors(320);
    for (std::size_t t = 0; t < sizes.size(); ++t) {
      const std::vector<double> lf = all_factors(sizes[t]);
      double acc = 0.0;
      for (std::size_t i = 0; i < lf.size(); ++i) acc += std::fabs(lf[i] - reference[i]);
      dev[t] += acc / static_cast<double>(lf.size());
    }
  }

  int shrinks = 0;
  for (std::size_t i = 1; i < dev.size(); ++i)
    if (dev[i] <= dev[i - 1]) ++shrinks;
  CHECK(shrinks >= 3);
  CHECK(dev.back() < 0.5 * dev.front());
}

TEST_CASE("MI factors keep the multiplicative chain rule") {
  const auto prob = oracle::make_problem(36, 3, 61);
  Dataset d = Dataset::complete(prob.y, prob.x, default_names(3));
  d = inject_mcar(d, std::vector<int>{1}, 0.2, 5);

  GibbsConfig cfg;
  cfg.burn_in = 50;
  cfg.spacing = 5;
  cfg.m = 6;
  cfg.seed = 8;
  const SelectionResult res = select_mi(impute(d, cfg));

  Xoshiro256pp rng(67);
  for (int t = 0; t < 100; ++t) {
    const uint32_t g1 = static_cast<uint32_t>(rng() & 7u);
    const uint32_t g2 = static_cast<uint32_t>(rng() & 7u);
    const uint32_t g3 = static_cast<uint32_t>(rng() & 7u);
    const double lhs = res.log_fbf[g1] - res.log_fbf[g3];
    const double rhs = (res.log_fbf[g1] - res.log_fbf[g2]) + (res.log_fbf[g2] - res.log_fbf[g3]);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(lhs)));
  }
}

TEST_CASE("empty imputation sets are rejected") {
  ImputationSet empty;
  empty.y = Vec::Zero(5);
  const FractionConfig f = explicit_fraction(0.5);
  CHECK_THROWS_AS(mi_log_fbf(ModelIndex::null_model(1), empty, f), Error);
  CHECK_THROWS_AS(select_mi(empty), Error);
}
