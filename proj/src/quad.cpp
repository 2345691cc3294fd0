#include "freeid/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "freeid/errors.hpp"

namespace freeid::quad {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double magnitude(double v) { return std::abs(v); }
double magnitude(const cplx& v) { return std::abs(v); }
bool finite(double v) { return std::isfinite(v); }
bool finite(const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

template <class T>
struct Segment {
  double lo;
  double hi;
  T value;
  double error;
  double roundoff;  // error floor set by cancellation in the panel sum
};

template <class T>
struct ByError {
  bool operator()(const Segment<T>& a, const Segment<T>& b) const { return a.error < b.error; }
};

template <class T, class F>
Segment<T> gauss_kronrod_15(const F& f, double lo, double hi, std::size_t& evals) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  std::array<T, 15> fx{};
  auto eval = [&](double x) {
    T v = f(x);
    if (!finite(v)) {
      std::ostringstream msg;
      msg << "integrand is not finite at x = " << x;
      throw NonFinite(msg.str());
    }
    return v;
  };
  fx[0] = eval(center);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fx[1 + 2 * j] = eval(center - dx);
    fx[2 + 2 * j] = eval(center + dx);
  }
  evals += 15;

  T kronrod = fx[0] * kWgk[7];
  T gauss = fx[0] * kWg[3];
  double abs_sum = magnitude(fx[0]) * kWgk[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const T pair = fx[1 + 2 * j] + fx[2 + 2 * j];
    kronrod += pair * kWgk[j];
    abs_sum += (magnitude(fx[1 + 2 * j]) + magnitude(fx[2 + 2 * j])) * kWgk[j];
    if (j % 2 == 1) gauss += pair * kWg[j / 2];
  }
  const T mean = kronrod * 0.5;
  double asc = magnitude(fx[0] - mean) * kWgk[7];
  for (std::size_t j = 0; j < 7; ++j) {
    asc += (magnitude(fx[1 + 2 * j] - mean) + magnitude(fx[2 + 2 * j] - mean)) * kWgk[j];
  }

  const double width = std::abs(half);
  double err = magnitude(kronrod - gauss) * width;
  asc *= width;
  abs_sum *= width;
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  const double roundoff = 50.0 * kEps * abs_sum;
  err = std::max(err, roundoff);
  return {lo, hi, kronrod * half, err, roundoff};
}

template <class T, class F>
QuadResult<T> adaptive(const F& f, double lo, double hi, const QuadConfig& cfg) {
  cfg.validate();
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("integrate_finite: require finite lo < hi");
  }
  std::size_t evals = 0;
  std::priority_queue<Segment<T>, std::vector<Segment<T>>, ByError<T>> heap;
  heap.push(gauss_kronrod_15<T>(f, lo, hi, evals));
  T total = heap.top().value;
  double total_err = heap.top().error;
  double total_floor = heap.top().roundoff;
  std::vector<Segment<T>> frozen;  // too narrow to split further

  for (int splits = 1;; ++splits) {
    const double target = std::max(cfg.abs_tol, cfg.rel_tol * magnitude(total));
    if (total_err <= target || total_err <= 2.0 * total_floor) break;
    if (heap.empty()) break;
    if (splits >= cfg.max_subdivisions) {
      std::ostringstream msg;
      msg << "quadrature on [" << lo << ", " << hi << "] did not converge after "
          << cfg.max_subdivisions << " subdivisions (error estimate " << total_err << ")";
      throw NonConvergence(msg.str(), magnitude(total), total_err);
    }
    Segment<T> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi) ||
        (worst.hi - worst.lo) < 100.0 * kEps * std::max(std::abs(mid), 1e-300)) {
      frozen.push_back(worst);
      continue;
    }
    Segment<T> left = gauss_kronrod_15<T>(f, worst.lo, mid, evals);
    Segment<T> right = gauss_kronrod_15<T>(f, mid, worst.hi, evals);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_floor += left.roundoff + right.roundoff - worst.roundoff;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the panels to drop the drift of the running updates.
  T sum{};
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  for (const auto& s : frozen) {
    sum += s.value;
    err += s.error;
  }
  return {sum, err, evals};
}

template <class T, class F>
QuadResult<T> tail(const F& f, double lo, double scale, const QuadConfig& cfg) {
  cfg.validate();
  if (!(scale > 0.0) || !std::isfinite(lo)) {
    throw std::invalid_argument("integrate_tail: require finite lo and scale > 0");
  }
  const double reach = lo + cfg.truncation_decades * scale;
  const double cap = lo + 1e6 * scale;
  QuadResult<T> out;
  double a = lo;
  double width = scale;
  const double negligible = 1e-2 * cfg.abs_tol;
  while (true) {
    const double b = a + width;
    QuadResult<T> part = adaptive<T>(f, a, b, cfg);
    out.value += part.value;
    out.est_error += part.est_error;
    out.evaluations += part.evaluations;
    a = b;
    if (a >= reach) {
      const double edge = magnitude(f(a)) * scale;
      ++out.evaluations;
      if (magnitude(part.value) <= negligible && edge <= negligible) break;
    }
    if (a >= cap) {
      throw NonConvergence("integrate_tail: integrand does not decay", magnitude(out.value),
                           out.est_error);
    }
    width *= 2.0;
  }
  return out;
}

}  // namespace

void QuadConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw std::invalid_argument("QuadConfig: rel_tol and abs_tol must be positive");
  }
  if (max_subdivisions < 1) {
    throw std::invalid_argument("QuadConfig: max_subdivisions must be at least 1");
  }
  if (!(truncation_decades > 0.0)) {
    throw std::invalid_argument("QuadConfig: truncation_decades must be positive");
  }
}

QuadResult<double> integrate_finite(const RealFn& f, double lo, double hi,
                                    const QuadConfig& cfg) {
  return adaptive<double>(f, lo, hi, cfg);
}

QuadResult<cplx> integrate_finite_complex(const ComplexFn& f, double lo, double hi,
                                          const QuadConfig& cfg) {
  return adaptive<cplx>(f, lo, hi, cfg);
}

QuadResult<double> integrate_tail(const RealFn& f, double lo, double scale,
                                  const QuadConfig& cfg) {
  return tail<double>(f, lo, scale, cfg);
}

QuadResult<cplx> integrate_tail_complex(const ComplexFn& f, double lo, double scale,
                                        const QuadConfig& cfg) {
  return tail<cplx>(f, lo, scale, cfg);
}

cplx laplace_transform(const ComplexFn& g, double t, const QuadConfig& cfg) {
  cfg.validate();
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("laplace_transform: t must be positive");
  }
  // Truncate where the integrand tail e^{-ts} |g(s)| / t is below abs_tol,
  // but never before truncation_decades / t.
  double s_max = cfg.truncation_decades / t;
  for (int i = 0; i < 60; ++i) {
    const double tail_bound = std::abs(g(s_max)) * std::exp(-t * s_max) / t;
    if (!std::isfinite(tail_bound)) throw NonFinite("laplace_transform: g is not finite");
    if (tail_bound < 1e-2 * cfg.abs_tol) break;
    s_max *= 1.5;
  }
  auto integrand = [&](double s) { return g(s) * std::exp(-t * s); };
  // Panels of one decay length keep the first split decisions sensible.
  const double step = std::min(s_max, 1.0 / t);
  cplx total{};
  double a = 0.0;
  while (a < s_max) {
    const double b = std::min(s_max, a + (a < 8.0 * step ? step : 4.0 * step));
    total += adaptive<cplx>(integrand, a, b, cfg).value;
    a = b;
  }
  return total;
}

cplx measure_integral(const RealFn& density, const ComplexFn& kernel, bool even,
                      const QuadConfig& cfg) {
  if (even) {
    auto folded = [&](double x) { return (kernel(x) + kernel(-x)) * density(x); };
    return adaptive<cplx>(folded, 0.0, 1.0, cfg).value + tail<cplx>(folded, 1.0, 1.0, cfg).value;
  }
  auto pos = [&](double x) { return kernel(x) * density(x); };
  auto neg = [&](double x) { return kernel(-x) * density(-x); };
  return adaptive<cplx>(pos, 0.0, 1.0, cfg).value + tail<cplx>(pos, 1.0, 1.0, cfg).value +
         adaptive<cplx>(neg, 0.0, 1.0, cfg).value + tail<cplx>(neg, 1.0, 1.0, cfg).value;
}

double measure_integral_real(const RealFn& density, const RealFn& kernel, bool even,
                             const QuadConfig& cfg) {
  if (even) {
    auto folded = [&](double x) { return (kernel(x) + kernel(-x)) * density(x); };
    return adaptive<double>(folded, 0.0, 1.0, cfg).value +
           tail<double>(folded, 1.0, 1.0, cfg).value;
  }
  auto pos = [&](double x) { return kernel(x) * density(x); };
  auto neg = [&](double x) { return kernel(-x) * density(-x); };
  return adaptive<double>(pos, 0.0, 1.0, cfg).value + tail<double>(pos, 1.0, 1.0, cfg).value +
         adaptive<double>(neg, 0.0, 1.0, cfg).value + tail<double>(neg, 1.0, 1.0, cfg).value;
}

}  // namespace freeid::quad
