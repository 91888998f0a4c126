#include "fbfmi/linmodel.hpp"

#include <cmath>
#include <string>

#include "fbfmi/errors.hpp"

namespace fbfmi {

FractionConfig minimal_fraction(int n, int k) {
  if (n < k + 2)
    fail(ErrorKind::InsufficientRows, "minimal fraction needs n >= k + 2, got n = " +
                                          std::to_string(n) + ", k = " + std::to_string(k));
  return {static_cast<double>(k + 1) / static_cast<double>(n), FractionMode::kMinimal};
}

FractionConfig explicit_fraction(double b) {
  if (!(b > 0.0) || b > 1.0)
    fail(ErrorKind::InvalidArgument, "fraction must lie in (0, 1], got " + std::to_string(b));
  return {b, FractionMode::kExplicit};
}

bool SuffStats::degenerate() const { return rss <= 1e-20 * yty; }

SuffStats fit_sufficient_stats(const Mat& x, const Vec& y, const ModelIndex& gamma) {
  const int n = static_cast<int>(x.rows());
  const int p = static_cast<int>(x.cols());
  if (gamma.p != p)
    fail(ErrorKind::DimensionMismatch, "model index covers " + std::to_string(gamma.p) +
                                           " predictors, data has " + std::to_string(p));
  if (y.size() != n) fail(ErrorKind::DimensionMismatch, "response length does not match row count");

  const std::vector<int> cols = gamma.included();
  const int k = static_cast<int>(cols.size()) + 1;
  if (n <= k)
    fail(ErrorKind::InsufficientRows,
         "need n > k, got n = " + std::to_string(n) + ", k = " + std::to_string(k));

  // Design: intercept column, then the selected predictor columns centered
  // so the intercept is orthogonal to the slopes.
  Mat design(n, k);
  design.col(0).setOnes();
  for (int c = 0; c < k - 1; ++c) {
    const auto col = x.col(cols[c]);
    if (!col.allFinite())
      fail(ErrorKind::InvalidArgument, "selected column " + std::to_string(cols[c]) +
                                           " contains missing cells");
    design.col(c + 1) = col.array() - col.mean();
  }

  SuffStats s;
  s.n = n;
  s.k = k;
  s.yty = y.squaredNorm();
  s.xtx = design.transpose() * design;
  s.xtx = ((s.xtx + s.xtx.transpose()) * 0.5).eval();
  s.xty = design.transpose() * y;

  const auto chol = cholesky_lower(s.xtx);
  if (!chol)
    fail(ErrorKind::RankDeficient, "design cross-product is numerically singular");
  s.chol = *chol;
  Vec z = s.chol.triangularView<Eigen::Lower>().solve(s.xty);
  s.theta_hat = s.chol.transpose().triangularView<Eigen::Upper>().solve(z);
  s.rss = (y - design * s.theta_hat).squaredNorm();
  return s;
}

namespace {

MvT student_t_marginal(const SuffStats& s, double df) {
  Mat scale = chol_inverse(s.chol) * (s.rss / df);
  return MvT(s.theta_hat, std::move(scale), df);
}

}  // namespace

MvT posterior_t(const SuffStats& s) {
  const double df = static_cast<double>(s.n - s.k);
  if (df < 1.0)
    fail(ErrorKind::InsufficientRows, "posterior needs n - k >= 1, got " + std::to_string(df));
  return student_t_marginal(s, df);
}

MvT fractional_t(const SuffStats& s, const FractionConfig& f) {
  if (!(f.b > 0.0) || f.b > 1.0)
    fail(ErrorKind::InvalidArgument, "fraction must lie in (0, 1]");
  const double df = s.n * f.b - s.k;
  // Tolerance absorbs the rounding of b = (k+1)/n, whose df is exactly 1.
  if (df < 1.0 - 1e-9)
    fail(ErrorKind::FractionTooSmall, "fraction gives n*b - k = " + std::to_string(df) +
                                          ", need at least 1");
  return student_t_marginal(s, df);
}

}  // namespace fbfmi
