#include "freeid/catalog.hpp"

#include <cmath>

#include "freeid/errors.hpp"
#include "freeid/specfun.hpp"
#include "stable_math.hpp"

namespace freeid::measures {
namespace {

constexpr double kPi = specfun::kPi;

using detail::inv_sinh;
using detail::log_cosh;
using detail::log_sinh_over_t;
using detail::log_tanh_over_t;
using detail::t_coth;
using detail::u_over_sinh;

cplx real(double v) { return {v, 0.0}; }

// Khintchine densities (even; value at 0 is the limit).

double m_cosh(double x) {
  x = std::abs(x);
  if (x == 0.0) return 1.0 / kPi;
  return 0.5 * x / (1.0 + x * x) * inv_sinh(0.5 * kPi * x);
}

double m_sinh(double x) {
  x = std::abs(x);
  if (x == 0.0) return 1.0 / kPi;
  return x / ((1.0 + x * x) * std::expm1(kPi * x));
}

double m_tanh(double x) {
  x = std::abs(x);
  return x / ((1.0 + x * x) * (std::exp(0.5 * kPi * x) + 1.0));
}

double m_laplace(double x) {
  x = std::abs(x);
  return x * std::exp(-x) / (1.0 + x * x);
}

// Levy densities of the background driving laws.

double levy_bdcf_cosh(double x) {  // (pi/4) cosh(pi x/2) / sinh^2(pi x/2)
  const double y = 0.5 * kPi * std::abs(x);
  const double e2 = std::exp(-2.0 * y);
  const double den = -std::expm1(-2.0 * y);
  return 0.25 * kPi * 2.0 * std::exp(-y) * (1.0 + e2) / (den * den);
}

double levy_bdcf_sinh(double x) {  // (pi/4) / sinh^2(pi x/2)
  const double s = inv_sinh(0.5 * kPi * std::abs(x));
  return 0.25 * kPi * s * s;
}

double levy_bdcf_tanh(double x) {  // (pi/8) / cosh^2(pi x/4)
  const double z = 0.25 * kPi * std::abs(x);
  const double e2 = std::exp(-2.0 * z);
  return 0.125 * kPi * 4.0 * e2 / ((1.0 + e2) * (1.0 + e2));
}

double levy_bdcf_laplace(double x) { return std::exp(-std::abs(x)); }

FiniteMeasure even_measure(double (*density)(double), std::string_view name) {
  FiniteMeasure m;
  m.density = density;
  m.even = true;
  // V(i) = -i m(R) for a symmetric pair, so the total mass follows from the
  // closed form at t = 1.
  m.mass_hint = -voiculescu::closed_form(name, 1.0).imag();
  return m;
}

KhintchinePair driver_pair(double (*levy)(double), double small_jump_limit,
                           std::string_view name) {
  LevyTriple tr;
  tr.levy_density = levy;
  tr.even = true;
  tr.small_jump_limit = small_jump_limit;
  KhintchinePair p = levy_to_khintchine(tr);
  p.m.mass_hint = -voiculescu::closed_form(name, 1.0).imag();
  return p;
}

CatalogEntry make(std::string name, std::string description, cplx (*log_cf)(double),
                  KhintchinePair pair, std::optional<std::string> bdcf_of,
                  std::string log_cf_text, std::string density_text, std::string closed_text) {
  CatalogEntry e;
  e.name = name;
  e.description = std::move(description);
  e.log_cf = LogCharFn{log_cf, true};
  e.pair = std::move(pair);
  e.closed_v = voiculescu::closed_fn(name);
  e.bdcf_of = std::move(bdcf_of);
  e.log_cf_text = std::move(log_cf_text);
  e.density_text = std::move(density_text);
  e.closed_text = std::move(closed_text);
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  out.push_back(make(
      "cosh", "hyperbolic cosine law, phi(t) = 1/cosh t",
      [](double t) { return real(-log_cosh(t)); }, {0.0, even_measure(m_cosh, "cosh")},
      std::nullopt, "-ln cosh t", "|x| / (2 (1+x^2) sinh(pi|x|/2))", "i[1 - t beta(t/2)]"));
  out.push_back(make(
      "sinh", "hyperbolic sine law, phi(t) = t/sinh t",
      [](double t) { return real(-log_sinh_over_t(t)); }, {0.0, even_measure(m_sinh, "sinh")},
      std::nullopt, "ln(t / sinh t)", "|x| / ((1+x^2)(e^{pi|x|} - 1))",
      "i[t psi(t/2) - t ln(t/2) + 1]"));
  out.push_back(make(
      "tanh", "hyperbolic tangent law, phi(t) = tanh t / t",
      [](double t) { return real(log_tanh_over_t(t)); }, {0.0, even_measure(m_tanh, "tanh")},
      std::nullopt, "ln(tanh t / t)", "|x| / ((1+x^2)(e^{pi|x|/2} + 1))",
      "it[ln(t/4) - psi(t/4 + 1/2)]"));
  out.push_back(make(
      "laplace", "Laplace (double exponential) law, phi(t) = 1/(1+t^2)",
      [](double t) { return real(-std::log1p(t * t)); },
      {0.0, even_measure(m_laplace, "laplace")}, std::nullopt, "-ln(1 + t^2)",
      "|x| e^{-|x|} / (1+x^2)", "2it[ci(t) cos t + si(t) sin t]"));
  out.push_back(make(
      "bdcf-cosh", "background driving law of cosh, psi(t) = exp(-t tanh t)",
      [](double t) { return real(-t * std::tanh(t)); },
      driver_pair(levy_bdcf_cosh, 1.0 / kPi, "bdcf-cosh"), "cosh", "-t tanh t",
      "x^2/(1+x^2) (pi/4) cosh(pi x/2) / sinh^2(pi x/2)",
      "i[1 + (t^2/2) zeta(2,t/2) - (t^2/4) zeta(2,t/4)]"));
  out.push_back(make(
      "bdcf-sinh", "background driving law of sinh, psi(t) = exp(1 - t coth t)",
      [](double t) { return real(1.0 - t_coth(t)); },
      driver_pair(levy_bdcf_sinh, 1.0 / kPi, "bdcf-sinh"), "sinh", "1 - t coth t",
      "x^2/(1+x^2) (pi/4) / sinh^2(pi x/2)", "i[1 + t - (t^2/2) zeta(2,t/2)]"));
  out.push_back(make(
      "bdcf-tanh", "background driving law of tanh, psi(t) = exp(2t/sinh 2t - 1)",
      [](double t) { return real(u_over_sinh(2.0 * t) - 1.0); },
      driver_pair(levy_bdcf_tanh, 0.0, "bdcf-tanh"), "tanh", "2t / sinh(2t) - 1",
      "x^2/(1+x^2) (pi/8) / cosh^2(pi x/4)", "it[(t/4) zeta(2,(t+2)/4) - 1]"));
  out.push_back(make(
      "bdcf-laplace", "background driving law of laplace, psi(t) = exp(-2t^2/(1+t^2))",
      [](double t) { return real(-2.0 * t * t / (1.0 + t * t)); },
      driver_pair(levy_bdcf_laplace, 0.0, "bdcf-laplace"), "laplace", "-2t^2 / (1+t^2)",
      "x^2/(1+x^2) e^{-|x|}", "2it[t(ci(t) sin t - si(t) cos t) - 1]"));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_lookup(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw UnknownDistribution(std::string(name));
}

std::optional<std::string> driver_of(std::string_view name) {
  for (const auto& e : catalog())
    if (e.bdcf_of && *e.bdcf_of == name) return e.name;
  return std::nullopt;
}

}  // namespace freeid::measures
