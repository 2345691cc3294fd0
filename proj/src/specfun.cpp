#include "freeid/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "freeid/errors.hpp"

namespace freeid::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": argument must be positive and finite, got " +
                      std::to_string(x));
  }
}

// Shift point for the recurrence before switching to asymptotics.
constexpr double kDigammaShift = 12.0;
constexpr double kZetaShift = 10.0;

// Bernoulli numbers B_{2k}, k = 1..7.
constexpr double kB2k[] = {1.0 / 6.0,   -1.0 / 30.0, 1.0 / 42.0,     -1.0 / 30.0,
                           5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0};

}  // namespace

SpecFunResult digamma_with_error(double z) {
  require_positive(z, "digamma");
  double shift = 0.0;
  double shift_mag = 0.0;
  while (z < kDigammaShift) {
    shift -= 1.0 / z;
    shift_mag += 1.0 / z;
    z += 1.0;
  }
  // psi(z) ~ ln z - 1/(2z) - sum_k B_{2k} / (2k z^{2k})
  const double inv2 = 1.0 / (z * z);
  double pow = inv2;
  double series = 0.0;
  double last = 0.0;
  for (int k = 1; k <= 7; ++k) {
    last = kB2k[k - 1] / (2.0 * k) * pow;
    series += last;
    pow *= inv2;
  }
  const double value = std::log(z) - 0.5 / z - series + shift;
  const double err = std::abs(last) + 4.0 * kEps * (std::abs(value) + shift_mag + std::log(z));
  return {value, err};
}

double digamma(double z) { return digamma_with_error(z).value; }

SpecFunResult hurwitz_zeta_2_with_error(double a) {
  require_positive(a, "hurwitz_zeta_2");
  // Head terms decrease with k; summed smallest first.
  double head = 0.0;
  int n = 0;
  double x = a;
  while (x < kZetaShift) {
    ++n;
    x += 1.0;
  }
  for (int k = n - 1; k >= 0; --k) {
    const double y = a + k;
    head += 1.0 / (y * y);
  }
  // Euler-Maclaurin tail: 1/x + 1/(2x^2) + sum_k B_{2k} / x^{2k+1}
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double pow = inv2 * inv;
  double tail = 0.0;
  double last = 0.0;
  for (int k = 1; k <= 7; ++k) {
    last = kB2k[k - 1] * pow;
    tail += last;
    pow *= inv2;
  }
  tail += inv + 0.5 * inv2;
  const double value = tail + head;
  return {value, std::abs(last) + 4.0 * kEps * value};
}

double hurwitz_zeta_2(double a) { return hurwitz_zeta_2_with_error(a).value; }

double beta_fn(double x) {
  require_positive(x, "beta_fn");
  return 0.5 * (digamma(0.5 * (x + 1.0)) - digamma(0.5 * x));
}

double beta_prime(double x) {
  require_positive(x, "beta_prime");
  return hurwitz_zeta_2(x) - 0.5 * hurwitz_zeta_2(0.5 * x);
}

SiCi sici(double x) {
  require_positive(x, "sici");
  constexpr double kSwitch = 4.0;
  if (x <= kSwitch) {
    // Maclaurin series for Si and Ci - gamma - ln x.
    double si_sum = 0.0;
    double ci_sum = 0.0;
    double fact_term = x;  // (-1)^k x^{2k+1} / (2k+1)!
    si_sum = x;
    for (int k = 1; k < 60; ++k) {
      // ci term: (-1)^k x^{2k} / (2k)!  derived from the previous odd term
      const double even_term = -fact_term * x / (2.0 * k);
      ci_sum += even_term / (2.0 * k);
      fact_term = even_term * x / (2.0 * k + 1.0);
      const double si_term = fact_term / (2.0 * k + 1.0);
      si_sum += si_term;
      if (std::abs(si_term) < kEps * std::abs(si_sum) &&
          std::abs(even_term) < kEps * (1.0 + std::abs(ci_sum)))
        break;
    }
    return {si_sum - kPi / 2, kEulerGamma + std::log(x) + ci_sum};
  }

  // Continued fraction for E1(ix) = -Ci(x) + i si(x), modified Lentz.
  using cd = std::complex<double>;
  constexpr double kTiny = 1e-300;
  cd b(1.0, x);
  cd c(1.0 / kTiny, 0.0);
  cd d = 1.0 / b;
  cd h = d;
  for (int i = 1; i < 1000; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cd del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
  }
  h *= cd(std::cos(x), -std::sin(x));
  return {h.imag(), -h.real()};
}

}  // namespace freeid::specfun
