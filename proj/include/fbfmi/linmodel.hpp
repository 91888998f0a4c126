#pragma once

#include "fbfmi/linalg.hpp"
#include "fbfmi/model_index.hpp"
#include "fbfmi/mvt.hpp"

namespace fbfmi {

enum class FractionMode { kMinimal, kExplicit };

// Fraction b of the likelihood used to turn the improper baseline prior
// into a proper fractional prior. The validity condition n*b - k >= 1 is
// checked where the fraction meets a concrete design.
struct FractionConfig {
  double b = 1.0;
  FractionMode mode = FractionMode::kExplicit;
};

// b = (k+1)/n: one minimal training sample for k regression parameters plus
// the variance, leaving the fractional posterior exactly one df.
FractionConfig minimal_fraction(int n, int k);

FractionConfig explicit_fraction(double b);

// Least-squares cross products for the design [1 | X_gamma] with the chosen
// predictor columns mean-centered. Holds the lower Cholesky factor of xtx.
struct SuffStats {
  Mat xtx;
  Vec xty;
  Vec theta_hat;  // intercept first, then the included predictors
  double rss = 0.0;
  double yty = 0.0;
  int n = 0;
  int k = 0;
  Mat chol;  // xtx = chol * chol^T

  // rss vanished: the response is an exact linear function of the design.
  bool degenerate() const;
};

// x must be complete on the columns gamma selects; n > k rows required.
SuffStats fit_sufficient_stats(const Mat& x, const Vec& y, const ModelIndex& gamma);

// Marginal posterior of (alpha, beta) under the sigma^{-2} baseline prior:
// t with df n-k, location theta_hat, scale rss/(n-k) * xtx^{-1}.
MvT posterior_t(const SuffStats& s);

// Marginal of (alpha, beta) when the likelihood is raised to b under the
// same prior: t with df n*b-k, location theta_hat, scale rss/(n*b-k) * xtx^{-1}.
// fractional_t(s, b=1) reproduces posterior_t(s) field for field.
MvT fractional_t(const SuffStats& s, const FractionConfig& f);

}  // namespace fbfmi
