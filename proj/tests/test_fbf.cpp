#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "fbfmi/errors.hpp"
#include "fbfmi/fbf.hpp"
#include "oracles.hpp"

using namespace fbfmi;

TEST_CASE("enumerate_models covers the space exactly once") {
  CHECK(enumerate_models(7).size() == 128);

  const auto two = enumerate_models(1);
  REQUIRE(two.size() == 2);
  CHECK(two[0].bits == 0u);
  CHECK(two[1].bits == 1u);

  const auto eight = enumerate_models(3);
  std::set<uint32_t> seen;
  for (const auto& m : eight) seen.insert(m.bits);
  CHECK(seen.size() == 8);

  CHECK_THROWS_AS(enumerate_models(26), Error);
  CHECK_THROWS_AS(enumerate_models(0), Error);
}

TEST_CASE("Savage-Dickey ratio equals the direct marginal-likelihood route") {
  const auto prob = oracle::make_problem(25, 3, 11);
  const SelectionResult res = select_complete(prob.x, prob.y);
  const FractionConfig f = resolve_fraction(25, 3, std::nullopt);
  for (const ModelIndex& gamma : enumerate_models(3)) {
    const double direct = direct_log_fbf(gamma, prob.x, prob.y, f);
    CHECK(std::fabs(direct - res.log_fbf[gamma.bits]) < 1e-8);
  }
  // The full model is pinned to zero on both routes.
  CHECK(res.log_fbf[7] == 0.0);
  CHECK(direct_log_fbf(ModelIndex::full_model(3), prob.x, prob.y, f) == 0.0);
}

TEST_CASE("b = 1 collapses every Bayes factor to zero on the direct route") {
  const auto prob = oracle::make_problem(18, 2, 21);
  const FractionConfig whole = explicit_fraction(1.0);
  for (const ModelIndex& gamma : enumerate_models(2)) {
    CHECK(std::fabs(direct_log_fbf(gamma, prob.x, prob.y, whole)) < 1e-10);
  }
}

TEST_CASE("null data favors the null model in most replications") {
  // p = 1 with beta = 0: the null's log FBF should be positive in the
  // clear majority of seeded replications (consistency direction).
  int wins = 0;
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) {
    Xoshiro256pp rng(derive_seed(5000, 0xd1, static_cast<uint64_t>(s)));
    Mat x(50, 1);
    Vec y(50);
    for (int i = 0; i < 50; ++i) {
      x(i, 0) = oracle::standard_normal(rng);
      y(i) = 0.4 + oracle::standard_normal(rng);  // response ignores x
    }
    const SelectionResult res = select_complete(x, y);
    if (res.log_fbf[0] > 0.0) ++wins;
  }
  CHECK(wins > seeds * 7 / 10);
}

TEST_CASE("posterior model probabilities normalize and weight correctly") {
  SUBCASE("two equal models split evenly under the uniform prior") {
    const auto probs = posterior_model_probs({0.7, 0.7}, 1, ModelPrior::kUniform);
    CHECK(probs[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(probs[1] == doctest::Approx(0.5).epsilon(1e-14));
  }

  SUBCASE("equal evidence under Scott-Berger spreads by model size") {
    const auto probs =
        posterior_model_probs({0.0, 0.0, 0.0, 0.0}, 2, ModelPrior::kScottBerger);
    CHECK(probs[0b00] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(probs[0b01] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(probs[0b10] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(probs[0b11] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }

  SUBCASE("random evidence still sums to one") {
    Xoshiro256pp rng(31);
    std::vector<double> lf(16);
    for (auto& v : lf) v = 40.0 * (rng.uniform() - 0.5);
    for (ModelPrior prior : {ModelPrior::kUniform, ModelPrior::kScottBerger}) {
      const auto probs = posterior_model_probs(lf, 4, prior);
      double total = 0.0;
      for (double v : probs) total += v;
      CHECK(std::fabs(total - 1.0) < 1e-12);
    }
  }

  SUBCASE("wrong model count is rejected") {
    CHECK_THROWS_AS(posterior_model_probs({0.0, 0.0, 0.0}, 2, ModelPrior::kUniform), Error);
  }
}

TEST_CASE("inclusion probabilities match brute-force summation") {
  Xoshiro256pp rng(77);
  std::vector<double> lf(8);
  for (auto& v : lf) v = 10.0 * (rng.uniform() - 0.5);
  const auto probs = posterior_model_probs(lf, 3, ModelPrior::kUniform);
  const Vec incl = inclusion_probs(probs, 3);

  for (int j = 0; j < 3; ++j) {
    double direct = 0.0;
    for (uint32_t bits = 0; bits < 8; ++bits)
      if ((bits >> j) & 1u) direct += probs[bits];
    CHECK(incl(j) == doctest::Approx(direct).epsilon(1e-14));
    CHECK(incl(j) >= 0.0);
    CHECK(incl(j) <= 1.0);
  }

  // Mass concentrated on the full model drives every inclusion to one.
  std::vector<double> peaked(8, -300.0);
  peaked[7] = 0.0;
  const Vec all_in = inclusion_probs(posterior_model_probs(peaked, 3, ModelPrior::kUniform), 3);
  for (int j = 0; j < 3; ++j) CHECK(all_in(j) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pipeline is label-equivariant") {
  const auto prob = oracle::make_problem(40, 4, 13);
  const SelectionResult base = select_complete(prob.x, prob.y);

  // Apply the permutation (0 1 2 3) -> (2 0 3 1) to the columns.
  const std::vector<int> perm = {2, 0, 3, 1};  // new column j = old column perm[j]
  Mat shuffled(prob.x.rows(), 4);
  for (int j = 0; j < 4; ++j) shuffled.col(j) = prob.x.col(perm[j]);
  const SelectionResult relabeled = select_complete(shuffled, prob.y);

  for (int j = 0; j < 4; ++j)
    CHECK(std::fabs(relabeled.inclusion(j) - base.inclusion(perm[j])) < 1e-10);
}

TEST_CASE("pipeline is scale-invariant in every log Bayes factor") {
  const auto prob = oracle::make_problem(35, 3, 17);
  const SelectionResult base = select_complete(prob.x, prob.y);

  Mat scaled = prob.x;
  scaled.col(1) *= 7.3;
  const SelectionResult rescaled = select_complete(scaled, prob.y);
  for (std::size_t i = 0; i < base.log_fbf.size(); ++i)
    CHECK(std::fabs(rescaled.log_fbf[i] - base.log_fbf[i]) < 1e-8);
}

TEST_CASE("stored factors satisfy the multiplicative chain rule") {
  const auto prob = oracle::make_problem(30, 4, 19);
  const SelectionResult res = select_complete(prob.x, prob.y);

  Xoshiro256pp rng(23);
  for (int t = 0; t < 200; ++t) {
    const uint32_t g1 = static_cast<uint32_t>(rng() & 15u);
    const uint32_t g2 = static_cast<uint32_t>(rng() & 15u);
    const uint32_t g3 = static_cast<uint32_t>(rng() & 15u);
    const double lhs = res.log_fbf[g1] - res.log_fbf[g3];
    const double rhs = (res.log_fbf[g1] - res.log_fbf[g2]) + (res.log_fbf[g2] - res.log_fbf[g3]);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(lhs)));
  }
}

TEST_CASE("select_complete resolves fractions and threads consistently") {
  const auto prob = oracle::make_problem(26, 3, 29);

  SelectOptions serial;
  serial.threads = 1;
  SelectOptions parallel;
  parallel.threads = 4;
  const SelectionResult a = select_complete(prob.x, prob.y, serial);
  const SelectionResult b = select_complete(prob.x, prob.y, parallel);
  for (std::size_t i = 0; i < a.log_fbf.size(); ++i) {
    CHECK(a.log_fbf[i] == b.log_fbf[i]);      // bitwise: same work, disjoint slots
    CHECK(a.post_prob[i] == b.post_prob[i]);
  }

  // Minimal fraction from the full design: (p + 1 + 1) / n.
  CHECK(a.fraction_b == doctest::Approx(5.0 / 26.0).epsilon(1e-15));

  SelectOptions explicit_b;
  explicit_b.fraction_b = 0.5;
  CHECK(select_complete(prob.x, prob.y, explicit_b).fraction_b == 0.5);
}
