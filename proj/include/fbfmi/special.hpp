#pragma once

#include <vector>

namespace fbfmi {

// Log-gamma via the Lanczos approximation (g = 7, 9 terms), relative error
// below 1e-12 on the real line away from the poles. Thread-safe, no global
// state.
double log_gamma(double x);

// Exact binomial coefficient as a double; valid for the small n used here.
double binomial(int n, int k);

// log(sum_i exp(v[i])) with the summation order fixed to the input order.
double log_sum_exp(const std::vector<double>& v);

// log((1/M) sum_i exp(v[i])).
double log_mean_exp(const std::vector<double>& v);

}  // namespace fbfmi
