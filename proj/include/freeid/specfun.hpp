#pragma once

// Real-argument special functions: digamma, Hurwitz zeta at s = 2, the
// alternating-series function beta(x) = sum (-1)^k / (x + k) and its
// derivative, and the sine/cosine integrals.
//
// All functions are pure and throw freeid::DomainError for x <= 0.

namespace freeid::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLn2 = 0.69314718055994530941723212145817657;

struct SpecFunResult {
  double value = 0.0;
  double est_error = 0.0;  // absolute
};

/// psi(z) = d/dz ln Gamma(z) for z > 0.
double digamma(double z);
SpecFunResult digamma_with_error(double z);

/// zeta(2, a) = sum_{k >= 0} (k + a)^-2, i.e. the trigamma function.
double hurwitz_zeta_2(double a);
SpecFunResult hurwitz_zeta_2_with_error(double a);

/// beta(x) = (psi((x+1)/2) - psi(x/2)) / 2.
double beta_fn(double x);

/// beta'(x) = zeta(2, x) - zeta(2, x/2) / 2 (negative for x > 0).
double beta_prime(double x);

struct SiCi {
  double si = 0.0;  // Si(x) - pi/2
  double ci = 0.0;  // Ci(x)
};

SiCi sici(double x);

inline double Si(double x) { return sici(x).si + kPi / 2; }
inline double Ci(double x) { return sici(x).ci; }

}  // namespace freeid::specfun
