#pragma once

// Reference computations kept independent of the library's own routines.

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

/// L_n^k(x) from the explicit sum  sum_j (-1)^j binom(n+k, n-j) x^j / j!.
/// Summed in long double: the alternating terms cancel heavily for large x.
inline double laguerre_series(int n, double k, double x) {
  long double total = 0.0L, factorial = 1.0L;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) factorial *= j;
    // binom(n+k, n-j) = prod_{i=1}^{n-j} (k + j + i) / i
    long double binom = 1.0L;
    for (int i = 1; i <= n - j; ++i) binom *= (static_cast<long double>(k) + j + i) / i;
    total += (j % 2 == 0 ? 1.0L : -1.0L) * binom * std::pow(static_cast<long double>(x), j) / factorial;
  }
  return static_cast<double>(total);
}

/// Composite trapezoid on a fine uniform grid; adequate for smooth, decaying
/// integrands when `n` is large.
inline double trapezoid(const std::function<double(double)>& f, double lo, double hi, int n) {
  const double h = (hi - lo) / n;
  double s = 0.5 * (f(lo) + f(hi));
  for (int i = 1; i < n; ++i) s += f(lo + i * h);
  return s * h;
}

/// Central fourth-order first derivative.
inline double derivative(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

/// Least-squares slope of log|y| against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline double rel(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace oracle
