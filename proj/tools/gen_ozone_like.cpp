// Generates the checked-in synthetic regression fixture data/ozone_like.csv:
// 178 rows, response y, predictors x4..x10 built from two latent factors so
// the columns carry the strong cross-correlations typical of meteorological
// data. The signal sits on x4, x7 and x9; the remaining columns are noise
// that stays correlated with the signal columns. Those correlations are what
// give imputation something to work with when x6..x10 lose cells.
//
// The committed CSV is the fixture of record; this tool documents how it was
// produced and regenerates it deterministically (up to libm rounding) from
// the seed below.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fbfmi/rng.hpp"

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Box-Muller on the engine's own uniforms, so the fixture does not depend on
// any library's normal_distribution implementation.
double draw_normal(fbfmi::Xoshiro256pp& rng) {
  double u1 = rng.uniform();
  while (u1 <= 0.0) u1 = rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regenerate the synthetic ozone-like fixture CSV"};
  std::string out = "data/ozone_like.csv";
  int n = 178;
  uint64_t seed = 20260818;
  app.add_option("--out", out, "output CSV path")->capture_default_str();
  app.add_option("--n", n, "number of rows")->capture_default_str();
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  fbfmi::Xoshiro256pp rng(fbfmi::derive_seed(seed, 0x667a6f6e65ULL));

  std::FILE* f = std::fopen(out.c_str(), "wb");
  if (f == nullptr) {
    std::fprintf(stderr, "cannot open %s for writing\n", out.c_str());
    return 4;
  }
  std::fprintf(f, "y,x4,x5,x6,x7,x8,x9,x10\n");

  for (int i = 0; i < n; ++i) {
    const double f1 = draw_normal(rng);
    const double f2 = draw_normal(rng);

    // Loadings chosen so pairwise predictor correlations land around
    // 0.3-0.8 and each column keeps roughly unit variance.
    const double x4 = 0.90 * f1 + 0.45 * draw_normal(rng);
    const double x5 = 0.85 * f1 + 0.53 * draw_normal(rng);
    const double x6 = 0.75 * f1 - 0.35 * f2 + 0.56 * draw_normal(rng);
    const double x7 = 0.50 * f1 + 0.70 * f2 + 0.51 * draw_normal(rng);
    const double x8 = 0.90 * f2 + 0.45 * draw_normal(rng);
    const double x9 = 0.55 * f1 + 0.55 * f2 + 0.63 * draw_normal(rng);
    const double x10 = 0.40 * f1 + 0.60 * f2 + 0.69 * draw_normal(rng);

    const double y = 1.5 + 0.55 * x4 + 0.45 * x7 - 0.50 * x9 + 1.10 * draw_normal(rng);

    std::fprintf(f, "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n", y, x4, x5, x6, x7,
                 x8, x9, x10);
  }
  if (std::fclose(f) != 0) {
    std::fprintf(stderr, "write to %s failed\n", out.c_str());
    return 4;
  }
  std::fprintf(stdout, "wrote %s (%d rows)\n", out.c_str(), n);
  return 0;
}
