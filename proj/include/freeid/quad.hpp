#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature on finite intervals, semi-infinite
// tails by explicit truncation, Laplace transforms, and integrals of a
// density against a kernel over the real line.

#include <complex>
#include <cstddef>
#include <functional>

namespace freeid::quad {

using cplx = std::complex<double>;
using RealFn = std::function<double(double)>;
using ComplexFn = std::function<cplx(double)>;

struct QuadConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  // Semi-infinite domains extend at least this many decay scales.
  double truncation_decades = 40.0;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

template <class T>
struct QuadResult {
  T value{};
  double est_error = 0.0;
  std::size_t evaluations = 0;
};

QuadResult<double> integrate_finite(const RealFn& f, double lo, double hi,
                                    const QuadConfig& cfg = {});

/// Real and imaginary parts share the panel subdivision.
QuadResult<cplx> integrate_finite_complex(const ComplexFn& f, double lo, double hi,
                                          const QuadConfig& cfg = {});

/// Integral over [lo, inf) of a function decaying on length scale `scale`.
/// Panels of doubling width are added until the domain covers at least
/// truncation_decades * scale and the contributions fall below abs_tol.
QuadResult<double> integrate_tail(const RealFn& f, double lo, double scale,
                                  const QuadConfig& cfg = {});
QuadResult<cplx> integrate_tail_complex(const ComplexFn& f, double lo, double scale,
                                        const QuadConfig& cfg = {});

/// int_0^inf g(s) e^{-t s} ds for t > 0.
cplx laplace_transform(const ComplexFn& g, double t, const QuadConfig& cfg = {});

/// int_R kernel(x) density(x) dx with the density defined on R \ {0}.
/// For an even density the integral folds onto (0, inf) as
/// int_0^inf (kernel(x) + kernel(-x)) density(x) dx.
cplx measure_integral(const RealFn& density, const ComplexFn& kernel, bool even,
                      const QuadConfig& cfg = {});
double measure_integral_real(const RealFn& density, const RealFn& kernel, bool even,
                             const QuadConfig& cfg = {});

}  // namespace freeid::quad
