#include "fbfmi/mvt.hpp"

#include <cmath>
#include <string>
#include <unordered_set>
#include <utility>

#include "fbfmi/errors.hpp"
#include "fbfmi/special.hpp"

namespace fbfmi {

namespace {
constexpr double kLogPi = 1.1447298858494001741;
}

MvT::MvT(Vec mu_in, Mat sigma_in, double nu_in)
    : mu(std::move(mu_in)), sigma(std::move(sigma_in)), nu(nu_in) {
  if (sigma.rows() != mu.size() || sigma.cols() != mu.size())
    fail(ErrorKind::DimensionMismatch, "scale matrix does not match location dimension");
  if (!(nu > 0.0))
    fail(ErrorKind::InvalidArgument, "degrees of freedom must be positive");
  if (!sigma.isApprox(sigma.transpose(), 1e-12))
    fail(ErrorKind::NotPositiveDefinite, "scale matrix is not symmetric");
  if (!cholesky_lower(sigma))
    fail(ErrorKind::NotPositiveDefinite, "scale matrix is not positive definite");
}

double mvt_logpdf(const Vec& x, const MvT& t) {
  const int q = t.dim();
  if (x.size() != q)
    fail(ErrorKind::DimensionMismatch,
         "point has dimension " + std::to_string(x.size()) + ", expected " + std::to_string(q));
  const auto chol = cholesky_lower(t.sigma);
  if (!chol) fail(ErrorKind::NotPositiveDefinite, "scale matrix is not positive definite");

  const Vec z = chol->triangularView<Eigen::Lower>().solve(x - t.mu);
  const double delta = z.squaredNorm();
  return log_gamma((t.nu + q) / 2.0) - log_gamma(t.nu / 2.0) - 0.5 * q * (std::log(t.nu) + kLogPi) -
         0.5 * chol_log_det(*chol) - 0.5 * (t.nu + q) * std::log1p(delta / t.nu);
}

MvT marginal(const MvT& t, const std::vector<int>& keep) {
  if (keep.empty()) fail(ErrorKind::EmptyIndexSet, "marginal needs at least one coordinate");
  const int q = t.dim();
  std::unordered_set<int> seen;
  for (int idx : keep) {
    if (idx < 0 || idx >= q)
      fail(ErrorKind::IndexOutOfRange, "coordinate " + std::to_string(idx) + " outside [0, " +
                                           std::to_string(q) + ")");
    if (!seen.insert(idx).second)
      fail(ErrorKind::IndexOutOfRange, "duplicate coordinate " + std::to_string(idx));
  }

  const int m = static_cast<int>(keep.size());
  Vec mu(m);
  Mat sigma(m, m);
  for (int i = 0; i < m; ++i) {
    mu(i) = t.mu(keep[i]);
    for (int j = 0; j < m; ++j) sigma(i, j) = t.sigma(keep[i], keep[j]);
  }
  return MvT(std::move(mu), std::move(sigma), t.nu);
}

}  // namespace fbfmi
