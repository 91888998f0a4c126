#pragma once

// Independent numerical oracles for the test suite. Everything here computes
// reference values by brute force — quadrature and explicit normal-equation
// solves — without touching the closed forms under test, so agreement is
// evidence, not tautology.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "fbfmi/linalg.hpp"
#include "fbfmi/rng.hpp"

namespace oracle {

using fbfmi::Mat;
using fbfmi::Vec;

// Composite Simpson rule; points must be odd and >= 3.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int points) {
  const int n = points - 1;  // even interval count
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + h * i) * ((i % 2 == 1) ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// log of the integral of exp(g) over [a, b], max-shifted for stability.
inline double log_integral_exp(const std::function<double(double)>& g, double a, double b,
                               int points) {
  const int n = points - 1;
  const double h = (b - a) / n;
  double peak = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) peak = std::max(peak, g(a + h * i));
  const double integral =
      simpson([&](double u) { return std::exp(g(u) - peak); }, a, b, points);
  return peak + std::log(integral);
}

// Normalized log density of the regression coefficient vector at
// theta_probe when the likelihood is raised to the power c under the
// sigma^{-2} baseline prior, with sigma^2 integrated out NUMERICALLY
// (substitution u = log sigma^2). Only the elementary Gaussian integral
// over theta is used analytically for the normalizing constant; the
// Student-t mixture identity under test never enters.
//
// Joint (up to c-independent constants shared by numerator and denominator):
//   p_c(theta, sigma^2) ∝ sigma^{-2} (sigma^2)^{-nc/2}
//                         exp(-c (rss + delta' Z'Z delta) / (2 sigma^2)).
inline double quad_coeff_log_density(const Mat& z, const Vec& y, double c,
                                     const Vec& theta_probe) {
  const int n = static_cast<int>(z.rows());
  const int k = static_cast<int>(z.cols());
  const Mat ztz = z.transpose() * z;
  const Vec theta_hat = ztz.ldlt().solve(z.transpose() * y);
  const double rss = (y - z * theta_hat).squaredNorm();
  const Vec delta = theta_probe - theta_hat;
  const double q_probe = rss + delta.dot(ztz * delta);
  const double log_det_ztz = std::log(ztz.determinant());

  const double nc = n * c;
  // Numerator: integrand exp(-(nc/2) u - (c q/2) e^{-u}); mode at log(q/n).
  const auto num = [&](double u) { return -0.5 * nc * u - 0.5 * c * q_probe * std::exp(-u); };
  // Denominator: theta integrated out analytically (Gaussian), leaving
  // exp(((k - nc)/2) u - (c rss/2) e^{-u}) times constants.
  const auto den = [&](double u) {
    return 0.5 * (k - nc) * u - 0.5 * c * rss * std::exp(-u);
  };
  const double u_num = std::log(q_probe / n);
  const double u_den = std::log(c * rss / std::max(nc - k, 0.5));

  const double log_num = log_integral_exp(num, u_num - 60.0, u_num + 140.0, 48001);
  const double log_den = 0.5 * k * (std::log(2.0 * M_PI) - std::log(c)) -
                         0.5 * log_det_ztz +
                         log_integral_exp(den, u_den - 60.0, u_den + 140.0, 48001);
  return log_num - log_den;
}

// Deterministic normal draws built on the project engine, so oracle inputs
// never depend on any library's distribution implementation.
inline double standard_normal(fbfmi::Xoshiro256pp& rng) {
  double u1 = rng.uniform();
  while (u1 <= 0.0) u1 = rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.283185307179586476925286766559 * u2);
}

// Random regression problem with a shared latent factor (so predictors are
// correlated), a sparse coefficient vector and unit-scale noise.
struct TestProblem {
  Mat x;
  Vec y;
};

inline TestProblem make_problem(int n, int p, uint64_t seed) {
  fbfmi::Xoshiro256pp rng(fbfmi::derive_seed(seed, 0x6f7261636cULL));
  Mat x(n, p);
  Vec y(n);
  for (int i = 0; i < n; ++i) {
    const double f = standard_normal(rng);
    for (int j = 0; j < p; ++j) x(i, j) = 0.6 * f + 0.8 * standard_normal(rng);
    double mean = 0.7;
    for (int j = 0; j < p; j += 2) {  // signal on even-indexed predictors
      mean += (j % 4 == 0 ? 0.9 : -0.6) * x(i, j);
    }
    y(i) = mean + standard_normal(rng);
  }
  return {std::move(x), std::move(y)};
}

}  // namespace oracle
