#pragma once

// Parameterizations of classical infinitely divisible laws: the
// log-characteristic function, the Khintchine pair [a, m] and the
// Levy-Khintchine triple [b, sigma^2, M], with conversions between them.

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "freeid/quad.hpp"

namespace freeid::measures {

using cplx = std::complex<double>;
using quad::QuadConfig;

/// t -> log phi(t) on the continuous branch with log phi(0) = 0.
struct LogCharFn {
  std::function<cplx(double)> eval;
  bool symmetric = false;  // phi real-valued, so eval is real and even

  cplx operator()(double t) const { return eval(t); }
};

/// Finite measure m on R: an atom at zero plus a density on R \ {0}.
/// A density must return its limit at x = 0 when called there.
struct FiniteMeasure {
  double atom_at_zero = 0.0;
  std::function<double(double)> density;  // empty means no continuous part
  bool even = true;
  std::optional<double> mass_hint;

  bool has_density() const { return static_cast<bool>(density); }
  double density_at(double x) const { return density ? density(x) : 0.0; }
};

struct KhintchinePair {
  double a = 0.0;
  FiniteMeasure m;
};

struct LevyTriple {
  double b = 0.0;
  double sigma2 = 0.0;
  std::function<double(double)> levy_density;  // on R \ {0}; empty means M = 0
  bool even = true;
  // lim_{x -> 0} x^2 M(x); the Khintchine density at the origin.
  double small_jump_limit = 0.0;
};

/// Total mass m(R) by quadrature.
double total_mass(const FiniteMeasure& m, const QuadConfig& cfg = {});

/// M(dx) = (1 + x^2) / x^2 m(dx), sigma^2 = m({0}), and the shift b corrected
/// for the change of compensator.
LevyTriple khintchine_to_levy(const KhintchinePair& p, const QuadConfig& cfg = {});
KhintchinePair levy_to_khintchine(const LevyTriple& tr, const QuadConfig& cfg = {});

/// Levy exponent of [a, m] at t by quadrature of the Khintchine integrand.
cplx levy_exponent(const KhintchinePair& p, double t, const QuadConfig& cfg = {});

/// log psi(t) = t d/dt log phi(t), five-point central difference with step
/// h * max(1, |t|).
cplx bdcf_log_cf(const LogCharFn& phi, double t, double h = 1e-3);

/// log phi(t) = int_0^t log psi(s) ds / s.
cplx log_cf_from_bdcf(const LogCharFn& psi, double t, const QuadConfig& cfg = {});

/// t^{c1} e^{-c2 t} |Phi(t)| on an increasing grid of positive t.
std::vector<double> check_levy_decay(const LogCharFn& phi, double c1, double c2,
                                     std::span<const double> t_grid);

}  // namespace freeid::measures
