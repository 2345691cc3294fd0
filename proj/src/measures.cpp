#include "freeid/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "freeid/errors.hpp"

namespace freeid::measures {

double total_mass(const FiniteMeasure& m, const QuadConfig& cfg) {
  double mass = m.atom_at_zero;
  if (m.has_density()) {
    mass += quad::measure_integral_real(m.density, [](double) { return 1.0; }, m.even, cfg);
  }
  return mass;
}

LevyTriple khintchine_to_levy(const KhintchinePair& p, const QuadConfig& cfg) {
  LevyTriple tr;
  tr.sigma2 = p.m.atom_at_zero;
  tr.even = p.m.even;
  tr.b = p.a;
  if (!p.m.has_density()) return tr;

  auto density = p.m.density;
  tr.levy_density = [density](double x) { return (1.0 + x * x) / (x * x) * density(x); };
  tr.small_jump_limit = density(0.0);
  if (!p.m.even) {
    // x [1{|x|<=1} - 1/(1+x^2)] (1+x^2)/x^2 = x on |x| <= 1 and -1/x beyond.
    auto correction = [](double x) { return std::abs(x) <= 1.0 ? x : -1.0 / x; };
    tr.b += quad::measure_integral_real(density, correction, false, cfg);
  }
  return tr;
}

KhintchinePair levy_to_khintchine(const LevyTriple& tr, const QuadConfig& cfg) {
  KhintchinePair p;
  p.a = tr.b;
  p.m.atom_at_zero = tr.sigma2;
  p.m.even = tr.even;
  if (!tr.levy_density) return p;

  auto levy = tr.levy_density;
  const double limit = tr.small_jump_limit;
  p.m.density = [levy, limit](double x) {
    if (x == 0.0) return limit;
    return x * x / (1.0 + x * x) * levy(x);
  };
  if (!tr.even) {
    auto correction = [](double x) { return std::abs(x) <= 1.0 ? x : -1.0 / x; };
    p.a -= quad::measure_integral_real(p.m.density, correction, false, cfg);
  }
  return p;
}

namespace {

// (sin y - y) / y^2, accurate for small y.
double sin_defect(double y) {
  if (std::abs(y) < 0.1) {
    const double y2 = y * y;
    return y * (-1.0 / 6.0 + y2 * (1.0 / 120.0 + y2 * (-1.0 / 5040.0 + y2 / 362880.0)));
  }
  return (std::sin(y) - y) / (y * y);
}

}  // namespace

cplx levy_exponent(const KhintchinePair& p, double t, const QuadConfig& cfg) {
  if (t == 0.0) return {0.0, 0.0};
  cplx value(-0.5 * t * t * p.m.atom_at_zero, t * p.a);
  if (!p.m.has_density()) return value;

  // Real part: (cos tx - 1)(1 + x^2)/x^2 = -2 sin^2(tx/2)(1 + x^2)/x^2.
  auto re_kernel = [t](double x) {
    if (x == 0.0) return -0.5 * t * t;
    const double s = std::sin(0.5 * t * x);
    return -2.0 * s * s * (1.0 + x * x) / (x * x);
  };
  value += quad::measure_integral_real(p.m.density, re_kernel, p.m.even, cfg);
  if (!p.m.even) {
    // Imaginary part: sin(tx) + (sin(tx) - tx)/x^2, odd in x.
    auto im_kernel = [t](double x) { return std::sin(t * x) + t * t * sin_defect(t * x); };
    value += cplx(0.0, quad::measure_integral_real(p.m.density, im_kernel, false, cfg));
  }
  return value;
}

cplx bdcf_log_cf(const LogCharFn& phi, double t, double h) {
  if (t == 0.0) throw PreconditionViolation("bdcf_log_cf: t must be nonzero");
  if (!(h > 0.0)) throw PreconditionViolation("bdcf_log_cf: step must be positive");
  const double step = h * std::max(1.0, std::abs(t));
  const cplx fp2 = phi(t + 2.0 * step);
  const cplx fp1 = phi(t + step);
  const cplx fm1 = phi(t - step);
  const cplx fm2 = phi(t - 2.0 * step);
  const cplx d = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * step);
  if (!std::isfinite(d.real()) || !std::isfinite(d.imag())) {
    throw NonFinite("bdcf_log_cf: log characteristic function not finite near t");
  }
  return t * d;
}

cplx log_cf_from_bdcf(const LogCharFn& psi, double t, const QuadConfig& cfg) {
  if (t == 0.0) return {0.0, 0.0};
  auto integrand = [&psi](double s) { return psi(s) / s; };
  if (t > 0.0) return quad::integrate_finite_complex(integrand, 0.0, t, cfg).value;
  return -quad::integrate_finite_complex(integrand, t, 0.0, cfg).value;
}

std::vector<double> check_levy_decay(const LogCharFn& phi, double c1, double c2,
                                     std::span<const double> t_grid) {
  if (!(c1 > 0.0) || !(c2 > 0.0)) {
    throw PreconditionViolation("check_levy_decay: c1 and c2 must be positive");
  }
  std::vector<double> out;
  out.reserve(t_grid.size());
  double prev = 0.0;
  for (double t : t_grid) {
    if (!(t > 0.0) || (!out.empty() && !(t > prev))) {
      throw PreconditionViolation("check_levy_decay: grid must be positive and increasing");
    }
    prev = t;
    const double mag = std::abs(phi(t));
    out.push_back(mag == 0.0 ? 0.0 : std::exp(c1 * std::log(t) - c2 * t + std::log(mag)));
  }
  return out;
}

}  // namespace freeid::measures
