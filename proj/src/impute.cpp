#include "fbfmi/impute.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "fbfmi/errors.hpp"
#include "fbfmi/rng.hpp"

namespace fbfmi {

namespace {

// Bartlett draw of W ~ Wishart(df, I_d): lower triangle standard normal,
// diagonal sqrt of chi-squared with decreasing df.
Mat wishart_identity_lower(int d, double df, Xoshiro256pp& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat a = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    std::gamma_distribution<double> chi2(0.5 * (df - i), 2.0);
    a(i, i) = std::sqrt(chi2(rng));
    for (int j = 0; j < i; ++j) a(i, j) = normal(rng);
  }
  return a;
}

struct MvnParams {
  Vec mean;
  Mat cov;
};

// One draw of (mu, Sigma) from the normal-inverse-Wishart full conditional
// given fully completed data: Sigma ~ IW(n-1, S), mu | Sigma ~ N(vbar, Sigma/n).
MvnParams draw_params(const Mat& v, Xoshiro256pp& rng) {
  const int n = static_cast<int>(v.rows());
  const int d = static_cast<int>(v.cols());

  const Vec vbar = v.colwise().mean();
  Mat centered = v.rowwise() - vbar.transpose();
  Mat scatter = centered.transpose() * centered;
  scatter = ((scatter + scatter.transpose()) * 0.5).eval();

  Eigen::LLT<Mat> scatter_llt(scatter);
  if (scatter_llt.info() != Eigen::Success)
    fail(ErrorKind::DegenerateCovariance, "scatter matrix is not positive definite");
  const Mat scatter_l = scatter_llt.matrixL();

  // Sigma = (B B^T)^{-1} with B = L^{-T} A has the IW(n-1, S) law.
  const Mat a = wishart_identity_lower(d, static_cast<double>(n - 1), rng);
  const Mat b = scatter_l.transpose().triangularView<Eigen::Upper>().solve(a);
  Mat precision = b * b.transpose();
  Eigen::LLT<Mat> prec_llt(precision);
  if (prec_llt.info() != Eigen::Success)
    fail(ErrorKind::DegenerateCovariance, "posterior precision draw is not positive definite");
  Mat cov = prec_llt.solve(Mat::Identity(d, d));
  cov = ((cov + cov.transpose()) * 0.5).eval();

  Eigen::LLT<Mat> cov_llt(cov);
  if (cov_llt.info() != Eigen::Success)
    fail(ErrorKind::DegenerateCovariance, "covariance draw is not positive definite");
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec z(d);
  for (int i = 0; i < d; ++i) z(i) = normal(rng);
  Vec mean = vbar + Mat(cov_llt.matrixL()) * z / std::sqrt(static_cast<double>(n));
  return {std::move(mean), std::move(cov)};
}

// Draw the missing coordinates of one row from the Gaussian conditional
// given the observed coordinates.
void draw_row_conditional(Mat& table, Eigen::Index r, const std::vector<int>& miss,
                          const std::vector<int>& obs, const MvnParams& params,
                          Xoshiro256pp& rng) {
  const int nm = static_cast<int>(miss.size());
  const int no = static_cast<int>(obs.size());

  Mat cov_oo(no, no), cov_mo(nm, no), cov_mm(nm, nm);
  Vec resid_o(no), mean_m(nm);
  for (int i = 0; i < no; ++i) {
    resid_o(i) = table(r, obs[i]) - params.mean(obs[i]);
    for (int j = 0; j < no; ++j) cov_oo(i, j) = params.cov(obs[i], obs[j]);
  }
  for (int i = 0; i < nm; ++i) {
    mean_m(i) = params.mean(miss[i]);
    for (int j = 0; j < no; ++j) cov_mo(i, j) = params.cov(miss[i], obs[j]);
    for (int j = 0; j < nm; ++j) cov_mm(i, j) = params.cov(miss[i], miss[j]);
  }

  Eigen::LLT<Mat> oo_llt(cov_oo);
  if (oo_llt.info() != Eigen::Success)
    fail(ErrorKind::DegenerateCovariance, "observed-block covariance is not positive definite");
  const Mat gain = oo_llt.solve(cov_mo.transpose()).transpose();  // Sigma_mo Sigma_oo^{-1}
  const Vec cond_mean = mean_m + gain * resid_o;
  Mat cond_cov = cov_mm - gain * cov_mo.transpose();
  cond_cov = ((cond_cov + cond_cov.transpose()) * 0.5).eval();

  Eigen::LLT<Mat> cond_llt(cond_cov);
  if (cond_llt.info() != Eigen::Success)
    fail(ErrorKind::DegenerateCovariance, "conditional covariance is not positive definite");
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec z(nm);
  for (int i = 0; i < nm; ++i) z(i) = normal(rng);
  const Vec draw = cond_mean + Mat(cond_llt.matrixL()) * z;
  for (int i = 0; i < nm; ++i) table(r, miss[i]) = draw(i);
}

}  // namespace

ImputationSet impute(const Dataset& d, const GibbsConfig& cfg) {
  if (cfg.m < 1) fail(ErrorKind::InvalidArgument, "need at least one imputation");
  if (cfg.burn_in < 0) fail(ErrorKind::InvalidArgument, "burn-in must be nonnegative");
  if (cfg.spacing < 1) fail(ErrorKind::InvalidArgument, "spacing must be at least 1");

  const int n = d.n_rows();
  const int p = d.n_predictors();
  const int joint_dim = p + 1;  // predictors plus the response
  if (n <= p + 1)
    fail(ErrorKind::DegenerateCovariance,
         "joint covariance draw needs n > p + 1, got n = " + std::to_string(n));

  // Missing / observed joint coordinates per row. The response occupies the
  // last joint coordinate and is always observed.
  std::vector<std::vector<int>> miss(n), obs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < p; ++j) (d.mask(i, j) ? obs[i] : miss[i]).push_back(j);
    obs[i].push_back(p);
    if (miss[i].size() == static_cast<size_t>(joint_dim))
      fail(ErrorKind::AllMissingRow, "row " + std::to_string(i) + " has no observed cells");
  }

  // Completed joint matrix; missing cells start at their column's observed mean.
  Mat v(n, joint_dim);
  v.col(p) = d.y;
  for (int j = 0; j < p; ++j) {
    double sum = 0.0;
    int count = 0;
    for (int i = 0; i < n; ++i)
      if (d.mask(i, j)) {
        sum += d.x(i, j);
        ++count;
      }
    if (count == 0)
      fail(ErrorKind::DegenerateCovariance, "column " + std::to_string(j) + " is entirely missing");
    const double mean = sum / count;
    for (int i = 0; i < n; ++i) v(i, j) = d.mask(i, j) ? d.x(i, j) : mean;
  }

  Xoshiro256pp rng(derive_seed(cfg.seed, /*tag=*/0x676962u));  // one stream per chain

  ImputationSet out;
  out.y = d.y;
  out.config = cfg;
  out.completed.reserve(cfg.m);

  const int total_sweeps = cfg.burn_in + cfg.spacing * cfg.m;
  for (int sweep = 1; sweep <= total_sweeps; ++sweep) {
    const MvnParams params = draw_params(v, rng);
    for (int i = 0; i < n; ++i) {
      if (!miss[i].empty()) draw_row_conditional(v, i, miss[i], obs[i], params, rng);
    }
    if (sweep > cfg.burn_in && (sweep - cfg.burn_in) % cfg.spacing == 0)
      out.completed.push_back(v.leftCols(p));
  }
  return out;
}

CompleteData listwise_delete(const Dataset& d) {
  CompleteData out;
  for (int i = 0; i < d.n_rows(); ++i)
    if (d.row_complete(i)) out.kept_rows.push_back(i);

  const int kept = static_cast<int>(out.kept_rows.size());
  const int k_full = d.n_predictors() + 1;
  if (kept <= k_full + 1)
    fail(ErrorKind::InsufficientRows, "only " + std::to_string(kept) +
                                          " complete rows survive; need more than " +
                                          std::to_string(k_full + 1));

  out.x.resize(kept, d.n_predictors());
  out.y.resize(kept);
  for (int r = 0; r < kept; ++r) {
    out.x.row(r) = d.x.row(out.kept_rows[r]);
    out.y(r) = d.y(out.kept_rows[r]);
  }
  return out;
}

}  // namespace fbfmi
