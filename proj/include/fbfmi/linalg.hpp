#pragma once

#include <Eigen/Dense>
#include <optional>

namespace fbfmi {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using BoolMat = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

// Unpivoted lower Cholesky with a pinned failure rule: factorization fails
// (returns nullopt) as soon as a pivot drops to or below rel_tol times the
// largest diagonal entry of the input. No jitter is ever added.
std::optional<Mat> cholesky_lower(const Mat& a, double rel_tol = 1e-10);

// log|A| for A = L L^T.
double chol_log_det(const Mat& chol_lower);

// (L L^T)^{-1}, symmetrized.
Mat chol_inverse(const Mat& chol_lower);

}  // namespace fbfmi
