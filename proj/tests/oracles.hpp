#pragma once

// Test-only oracles: brute-force series in long double, independent of the
// library kernels.

#include <cmath>

namespace oracle {

// psi(z) = -gamma + sum_k (1/(k+1) - 1/(k+z)), with an Euler-Maclaurin tail.
inline double digamma(double z) {
  const long double g = 0.577215664901532860606512090082402431L;
  const int n = 200000;
  long double s = 0.0L;
  for (int k = n - 1; k >= 0; --k) s += 1.0L / (k + 1) - 1.0L / (k + (long double)z);
  const long double a = n + (long double)z, b = n + 1.0L;
  // sum_{k>=n} (1/(k+1) - 1/(k+z)) ~ log(a/b) + corrections
  long double tail = std::log(a / b) + 0.5L * (1.0L / b - 1.0L / a) +
                     (1.0L / (12 * b * b) - 1.0L / (12 * a * a));
  return double(-g + s + tail);
}

inline double zeta2(double a) {
  const int n = 200000;
  long double s = 0.0L;
  for (int k = n - 1; k >= 0; --k) s += 1.0L / ((k + (long double)a) * (k + (long double)a));
  const long double x = n + (long double)a;
  return double(s + 1.0L / x + 1.0L / (2 * x * x) + 1.0L / (6 * x * x * x));
}

// Sum over pairs (2j, 2j+1) of f(x+2j) - f(x+2j+1) with f = 1/u^p, plus
// half the next term as an Euler transform of the remainder.
inline double alternating(double x, int p) {
  const int n = 400000;
  long double s = 0.0L;
  for (int k = n - 1; k >= 0; --k) {
    const long double u = x + (long double)k;
    s += ((k % 2) ? -1.0L : 1.0L) / std::pow(u, p);
  }
  s += 0.5L / std::pow(x + (long double)n, p);
  return double(s);
}

}  // namespace oracle
