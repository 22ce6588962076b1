#pragma once

#include <cmath>
#include <complex>
#include <random>

namespace testutil {

// high-precision reference constants
inline constexpr double kGamma14 = 3.625609908221908311930685155868;  // Gamma(1/4)
inline constexpr double kGamma13 = 2.678938534707747633655692940975;  // Gamma(1/3)
inline constexpr double kPi = 3.14159265358979323846264338327950288;

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  const double scale = std::max(std::abs(want), 1e-30);
  return std::abs(got - want) / scale;
}

inline double rel_err(double got, double want) {
  return rel_err(std::complex<double>(got, 0.0), std::complex<double>(want, 0.0));
}

// random tau in the band used throughout the tests, reproducible
inline std::complex<double> random_tau(std::mt19937& rng, double im_lo = 0.6, double im_hi = 3.0) {
  std::uniform_real_distribution<double> re(-0.5, 0.5);
  std::uniform_real_distribution<double> im(im_lo, im_hi);
  return {re(rng), im(rng)};
}

inline double ipow(double x, int n) {
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= x;
  return p;
}

}  // namespace testutil
