#include "fbfmi/linalg.hpp"

#include <cmath>

namespace fbfmi {

std::optional<Mat> cholesky_lower(const Mat& a, double rel_tol) {
  const Eigen::Index n = a.rows();
  if (n == 0 || a.cols() != n) return std::nullopt;
  const double max_diag = a.diagonal().maxCoeff();
  if (!(max_diag > 0.0) || !std::isfinite(max_diag)) return std::nullopt;
  const double floor = rel_tol * max_diag;

  Mat chol = Mat::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = a(j, j) - chol.row(j).head(j).squaredNorm();
    if (!(d > floor) || !std::isfinite(d)) return std::nullopt;
    const double ljj = std::sqrt(d);
    chol(j, j) = ljj;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      const double s = a(i, j) - chol.row(i).head(j).dot(chol.row(j).head(j));
      chol(i, j) = s / ljj;
    }
  }
  return chol;
}

double chol_log_det(const Mat& chol_lower) {
  return 2.0 * chol_lower.diagonal().array().log().sum();
}

Mat chol_inverse(const Mat& chol_lower) {
  const Eigen::Index n = chol_lower.rows();
  Mat inv = chol_lower.triangularView<Eigen::Lower>().solve(Mat::Identity(n, n));
  inv = chol_lower.transpose().triangularView<Eigen::Upper>().solve(inv);
  return ((inv + inv.transpose()) * 0.5).eval();
}

}  // namespace fbfmi
