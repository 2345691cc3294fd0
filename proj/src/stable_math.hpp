#pragma once

// Overflow-safe hyperbolic helpers shared by the catalog and the identity
// checks.

#include <cmath>

namespace freeid::detail {

inline constexpr double kLn2 = 0.69314718055994530941723212145817657;

inline double log_cosh(double t) {
  t = std::abs(t);
  if (t > 20.0) return t - kLn2 + std::log1p(std::exp(-2.0 * t));
  return std::log(std::cosh(t));
}

// ln(sinh t / t), t != 0
inline double log_sinh_over_t(double t) {
  t = std::abs(t);
  if (t < 1e-4) return t * t / 6.0 - t * t * t * t / 180.0;
  if (t > 20.0) return t - kLn2 + std::log1p(-std::exp(-2.0 * t)) - std::log(t);
  return std::log(std::sinh(t) / t);
}

// ln(tanh t / t)
inline double log_tanh_over_t(double t) {
  t = std::abs(t);
  if (t < 1e-4) return -t * t / 3.0 + 7.0 * t * t * t * t / 90.0;
  if (t > 0.5) return std::log1p(-2.0 / (std::exp(2.0 * t) + 1.0)) - std::log(t);
  return std::log(std::tanh(t) / t);
}

// u / sinh u
inline double u_over_sinh(double u) {
  u = std::abs(u);
  if (u < 1e-4) return 1.0 - u * u / 6.0;
  return 2.0 * u * std::exp(-u) / -std::expm1(-2.0 * u);
}

// t coth t
inline double t_coth(double t) {
  t = std::abs(t);
  if (t < 1e-4) return 1.0 + t * t / 3.0;
  return t / std::tanh(t);
}

// 1 / sinh y for y > 0
inline double inv_sinh(double y) { return 2.0 * std::exp(-y) / -std::expm1(-2.0 * y); }

}  // namespace freeid::detail
