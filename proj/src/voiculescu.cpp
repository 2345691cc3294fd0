#include "freeid/voiculescu.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "freeid/errors.hpp"
#include "freeid/specfun.hpp"

namespace freeid::voiculescu {
namespace {

constexpr cplx kI(0.0, 1.0);

void require_t(double t, const char* fn) {
  if (!(t >= kMinT) || !std::isfinite(t)) {
    std::ostringstream msg;
    msg << fn << ": t must be finite and >= " << kMinT << ", got " << t;
    throw PreconditionViolation(msg.str());
  }
}

void require_symmetric(const KhintchinePair& p, const char* fn) {
  if (p.a != 0.0 || !p.m.even) {
    throw PreconditionViolation(std::string(fn) + ": requires a symmetric pair [0, m]");
  }
}

using specfun::beta_fn;
using specfun::digamma;
using specfun::hurwitz_zeta_2;

cplx closed_cosh(double t) { return kI * (1.0 - t * beta_fn(0.5 * t)); }

cplx closed_sinh(double t) {
  return kI * (t * digamma(0.5 * t) - t * std::log(0.5 * t) + 1.0);
}

cplx closed_tanh(double t) {
  return kI * t * (std::log(0.25 * t) - digamma(0.25 * t + 0.5));
}

cplx closed_laplace(double t) {
  const auto [si, ci] = specfun::sici(t);
  return 2.0 * kI * t * (ci * std::cos(t) + si * std::sin(t));
}

cplx closed_bdcf_cosh(double t) {
  return kI * (1.0 + 0.5 * t * t * hurwitz_zeta_2(0.5 * t) - 0.25 * t * t * hurwitz_zeta_2(0.25 * t));
}

cplx closed_bdcf_sinh(double t) {
  return kI * (1.0 + t - 0.5 * t * t * hurwitz_zeta_2(0.5 * t));
}

cplx closed_bdcf_tanh(double t) {
  return kI * t * (0.25 * t * hurwitz_zeta_2(0.25 * (t + 2.0)) - 1.0);
}

cplx closed_bdcf_laplace(double t) {
  const auto [si, ci] = specfun::sici(t);
  return 2.0 * kI * t * (t * (ci * std::sin(t) - si * std::cos(t)) - 1.0);
}

struct ClosedEntry {
  std::string_view name;
  cplx (*fn)(double);
};

constexpr std::array<ClosedEntry, 8> kClosed = {{
    {"cosh", closed_cosh},
    {"sinh", closed_sinh},
    {"tanh", closed_tanh},
    {"laplace", closed_laplace},
    {"bdcf-cosh", closed_bdcf_cosh},
    {"bdcf-sinh", closed_bdcf_sinh},
    {"bdcf-tanh", closed_bdcf_tanh},
    {"bdcf-laplace", closed_bdcf_laplace},
}};

// Five-point central difference.
cplx five_point(const VoiculescuFn& v, double t, double d) {
  return (v(t - 2.0 * d) - 8.0 * v(t - d) + 8.0 * v(t + d) - v(t + 2.0 * d)) / (12.0 * d);
}

}  // namespace

std::string_view to_string(Source s) {
  switch (s) {
    case Source::LevelA: return "levelA";
    case Source::LevelZ: return "levelZ";
    case Source::LevelZSymmetric: return "symZ";
    case Source::Closed: return "closed";
    case Source::Thm2: return "thm2";
  }
  return "unknown";
}

cplx level_a(const LogCharFn& phi, double t, const QuadConfig& cfg) {
  require_t(t, "level_a");
  auto conj_log = [&phi](double s) { return std::conj(phi(s)); };
  return kI * t * t * quad::laplace_transform(conj_log, t, cfg);
}

cplx level_z(const KhintchinePair& p, double t, const QuadConfig& cfg) {
  require_t(t, "level_z");
  const cplx it = kI * t;
  cplx v = p.a + p.m.atom_at_zero / it;
  if (p.m.has_density()) {
    auto kernel = [it](double x) { return (1.0 + it * x) / (it - x); };
    v += quad::measure_integral(p.m.density, kernel, p.m.even, cfg);
  }
  return v;
}

cplx level_z_symmetric(const KhintchinePair& p, double t, const QuadConfig& cfg) {
  require_t(t, "level_z_symmetric");
  require_symmetric(p, "level_z_symmetric");
  double integral = p.m.atom_at_zero / (t * t);
  if (p.m.has_density()) {
    const double t2 = t * t;
    auto kernel = [t2](double x) { return (1.0 + x * x) / (t2 + x * x); };
    integral += quad::measure_integral_real(p.m.density, kernel, true, cfg);
  }
  return -kI * t * integral;
}

bool has_closed_form(std::string_view name) {
  for (const auto& e : kClosed)
    if (e.name == name) return true;
  return false;
}

cplx closed_form(std::string_view name, double t) {
  for (const auto& e : kClosed) {
    if (e.name == name) {
      if (!(t > 0.0)) throw PreconditionViolation("closed_form: t must be positive");
      return e.fn(t);
    }
  }
  throw UnknownDistribution(std::string(name));
}

cplx thm2_forward(const VoiculescuFn& v, double t, double h) {
  if (!(t > 0.0)) throw PreconditionViolation("thm2_forward: t must be positive");
  if (!(h > 0.0) || 2.0 * h >= 1.0) {
    throw PreconditionViolation("thm2_forward: relative step must lie in (0, 0.5)");
  }
  const double d = h * t;
  const cplx coarse = five_point(v, t, d);
  const cplx fine = five_point(v, t, 0.5 * d);
  const cplx deriv = (16.0 * fine - coarse) / 15.0;
  const cplx out = v(t) - t * deriv;
  if (!std::isfinite(out.real()) || !std::isfinite(out.imag())) {
    throw NonFinite("thm2_forward: transform not finite near t");
  }
  return out;
}

cplx thm2_inverse(const VoiculescuFn& v_psi, cplx v_at_1, double t, const QuadConfig& cfg) {
  if (!(t > 0.0)) throw PreconditionViolation("thm2_inverse: t must be positive");
  if (t == 1.0) return v_at_1;
  auto integrand = [&v_psi](double s) { return v_psi(s) / (s * s); };
  const cplx integral = t > 1.0 ? quad::integrate_finite_complex(integrand, 1.0, t, cfg).value
                                : -quad::integrate_finite_complex(integrand, t, 1.0, cfg).value;
  return t * v_at_1 - t * integral;
}

ExpectationPair corollary1_check(const KhintchinePair& p, double t, const QuadConfig& cfg) {
  require_t(t, "corollary1_check");
  require_symmetric(p, "corollary1_check");
  ExpectationPair out;
  out.rhs = p.m.atom_at_zero / (t * t);
  if (p.m.has_density()) {
    const double t2 = t * t;
    auto kernel = [t2](double x) { return (1.0 + x * x) / (t2 + x * x); };
    out.rhs += quad::measure_integral_real(p.m.density, kernel, true, cfg);
  }
  // Inner integral int (1 - cos(sx))(1+x^2)/x^2 m(dx) = -Re Phi(s).
  auto inner = [&](double s) { return cplx(-measures::levy_exponent(p, s, cfg).real(), 0.0); };
  out.lhs = t * quad::laplace_transform(inner, t, cfg).real();
  return out;
}

VoiculescuFn level_a_fn(LogCharFn phi, QuadConfig cfg) {
  return {[phi = std::move(phi), cfg](double t) { return level_a(phi, t, cfg); }, Source::LevelA};
}

VoiculescuFn level_z_fn(KhintchinePair p, QuadConfig cfg) {
  return {[p = std::move(p), cfg](double t) { return level_z(p, t, cfg); }, Source::LevelZ};
}

VoiculescuFn level_z_symmetric_fn(KhintchinePair p, QuadConfig cfg) {
  return {[p = std::move(p), cfg](double t) { return level_z_symmetric(p, t, cfg); },
          Source::LevelZSymmetric};
}

VoiculescuFn closed_fn(std::string name) {
  if (!has_closed_form(name)) throw UnknownDistribution(name);
  return {[name = std::move(name)](double t) { return closed_form(name, t); }, Source::Closed};
}

}  // namespace freeid::voiculescu
