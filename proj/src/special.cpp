#include "fbfmi/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fbfmi/errors.hpp"

namespace fbfmi {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2
constexpr double kLogPi = 1.1447298858494001741;

}  // namespace

double log_gamma(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return kLogPi - std::log(std::abs(std::sin(M_PI * x))) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (int i = 1; i < 9; ++i) series += kLanczos[i] / (z + i);
  const double t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

double log_sum_exp(const std::vector<double>& v) {
  if (v.empty()) fail(ErrorKind::InvalidArgument, "log_sum_exp of empty vector");
  double hi = -std::numeric_limits<double>::infinity();
  for (double x : v) hi = std::max(hi, x);
  if (!std::isfinite(hi)) return hi;  // all -inf, or a NaN/inf poisoning the max
  double acc = 0.0;
  for (double x : v) acc += std::exp(x - hi);
  return hi + std::log(acc);
}

double log_mean_exp(const std::vector<double>& v) {
  return log_sum_exp(v) - std::log(static_cast<double>(v.size()));
}

}  // namespace fbfmi
