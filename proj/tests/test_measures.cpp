#include <doctest.h>

#include <cmath>
#include <vector>

#include "freeid/catalog.hpp"
#include "freeid/errors.hpp"
#include "freeid/measures.hpp"
#include "freeid/specfun.hpp"

using namespace freeid::measures;
using freeid::specfun::kPi;

namespace {

// Exponential law: log phi = -log(1 - it), M(dx) = e^{-x}/x dx on x > 0.
LevyTriple exponential_triple() {
  LevyTriple tr;
  tr.b = 1.0 - std::exp(-1.0);
  tr.levy_density = [](double x) { return x > 0.0 ? std::exp(-x) / x : 0.0; };
  tr.even = false;
  tr.small_jump_limit = 0.0;
  return tr;
}

}  // namespace

TEST_CASE("catalog has the eight entries in order") {
  const std::vector<std::string> names = {"cosh", "sinh", "tanh", "laplace",
                                          "bdcf-cosh", "bdcf-sinh", "bdcf-tanh", "bdcf-laplace"};
  REQUIRE(catalog().size() == names.size());
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(catalog()[i].name == names[i]);
  CHECK_THROWS_AS(catalog_lookup("nosuch"), freeid::UnknownDistribution);
  CHECK(driver_of("cosh") == std::optional<std::string>("bdcf-cosh"));
  CHECK(!driver_of("bdcf-cosh"));
}

TEST_CASE("total masses match quadrature reference values") {
  // mpmath: 2 * int_0^inf m(x) dx
  CHECK(total_mass(catalog_lookup("cosh").pair.m) == doctest::Approx(kPi / 2 - 1).epsilon(1e-11));
  CHECK(total_mass(catalog_lookup("cosh").pair.m) == doctest::Approx(0.57079632679489661923).epsilon(1e-11));
  CHECK(total_mass(catalog_lookup("sinh").pair.m) == doctest::Approx(0.27036284546147817002).epsilon(1e-11));
  CHECK(total_mass(catalog_lookup("tanh").pair.m) == doctest::Approx(0.30043348133341844921).epsilon(1e-11));
  CHECK(total_mass(catalog_lookup("laplace").pair.m) == doctest::Approx(0.68675592311285406567).epsilon(1e-11));
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    REQUIRE(e.pair.m.mass_hint);
    CHECK(total_mass(e.pair.m) == doctest::Approx(*e.pair.m.mass_hint).epsilon(1e-10));
  }
}

TEST_CASE("densities: m_C = m_S + m_T and the two forms of m_S agree") {
  const auto& c = catalog_lookup("cosh").pair.m;
  const auto& s = catalog_lookup("sinh").pair.m;
  const auto& t = catalog_lookup("tanh").pair.m;
  for (double x : {-30.0, -2.0, -0.1, 0.0, 1e-9, 0.3, 1.0, 4.0, 50.0, 400.0}) {
    CAPTURE(x);
    CHECK(c.density_at(x) == doctest::Approx(s.density_at(x) + t.density_at(x)).epsilon(1e-13));
    if (std::abs(x) > 1e-3) {
      const double ax = std::abs(x);
      const double printed = ax / ((1 + x * x) * (std::exp(kPi * ax) - 1));
      CHECK(s.density_at(x) == doctest::Approx(printed).epsilon(1e-12));
    }
    CHECK(std::isfinite(c.density_at(x)));
  }
  CHECK(c.density_at(0.0) == doctest::Approx(1 / kPi));
  CHECK(s.density_at(0.0) == doctest::Approx(1 / kPi));
  CHECK(t.density_at(0.0) == 0.0);
}

TEST_CASE("levy exponent reproduces log phi") {
  for (const auto& e : catalog()) {
    for (double t : {0.25, 1.0, 3.0, 10.0}) {
      CAPTURE(e.name);
      CAPTURE(t);
      const cplx lhs = levy_exponent(e.pair, t);
      const cplx rhs = e.log_cf(t);
      CHECK(std::abs(lhs - rhs) <= 1e-8 * (1 + std::abs(rhs)));
    }
  }
  // Reference: -log cosh 1.
  CHECK(levy_exponent(catalog_lookup("cosh").pair, 1.0).real() ==
        doctest::Approx(-0.43378083048302718703).epsilon(1e-10));
}

TEST_CASE("non-symmetric law: exponential distribution") {
  const auto pair = levy_to_khintchine(exponential_triple());
  CHECK(!pair.m.even);
  CHECK(pair.m.density_at(-1.0) == 0.0);
  for (double t : {0.3, 1.0, 4.0}) {
    CAPTURE(t);
    const cplx expected = -std::log(cplx(1.0, -t));
    CHECK(std::abs(levy_exponent(pair, t) - expected) < 1e-9);
  }
  const auto back = khintchine_to_levy(pair);
  CHECK(back.b == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-10));
  CHECK(back.levy_density(0.5) == doctest::Approx(std::exp(-0.5) / 0.5).epsilon(1e-13));
}

TEST_CASE("gaussian component is the atom at zero") {
  KhintchinePair g;
  g.m.atom_at_zero = 2.0;
  const auto tr = khintchine_to_levy(g);
  CHECK(tr.sigma2 == 2.0);
  CHECK(total_mass(g.m) == 2.0);
  CHECK(std::abs(levy_exponent(g, 3.0) - cplx(-9.0)) < 1e-14);
  CHECK(levy_to_khintchine(tr).m.atom_at_zero == 2.0);
}

TEST_CASE("khintchine <-> levy round trip") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const auto tr = khintchine_to_levy(e.pair);
    const auto back = levy_to_khintchine(tr);
    CHECK(std::abs(back.a - e.pair.a) < 1e-9);
    CHECK(tr.b == doctest::Approx(e.pair.a));  // symmetric: both shifts vanish
    for (double x : {1e-4, 0.5, 1.0, 3.0, 25.0}) {
      CHECK(std::abs(back.m.density_at(x) - e.pair.m.density_at(x)) < 1e-12);
      CHECK(tr.levy_density(x) * x * x / (1 + x * x) == doctest::Approx(e.pair.m.density_at(x)));
    }
  }
}

TEST_CASE("BDCF by differentiation and its inverse") {
  // Reference values: -tanh 1, 1 - coth 1, 2/sinh 2 - 1.
  CHECK(bdcf_log_cf(catalog_lookup("cosh").log_cf, 1.0).real() ==
        doctest::Approx(-0.76159415595576488812).epsilon(1e-10));
  CHECK(bdcf_log_cf(catalog_lookup("sinh").log_cf, 1.0).real() ==
        doctest::Approx(-0.31303528549933130364).epsilon(1e-10));
  CHECK(bdcf_log_cf(catalog_lookup("tanh").log_cf, 1.0).real() ==
        doctest::Approx(-0.44855887045643358448).epsilon(1e-10));
  for (const char* sd : {"cosh", "sinh", "tanh", "laplace"}) {
    const auto& phi = catalog_lookup(sd).log_cf;
    const auto& psi = catalog_lookup(*driver_of(sd)).log_cf;
    for (double t : {0.2, 1.0, 5.0, 20.0}) {
      CAPTURE(sd);
      CAPTURE(t);
      CHECK(std::abs(bdcf_log_cf(phi, t) - psi(t)) < 1e-8 * (1 + std::abs(psi(t))));
      CHECK(std::abs(log_cf_from_bdcf(psi, t) - phi(t)) < 1e-9 * (1 + std::abs(phi(t))));
    }
  }
  CHECK_THROWS_AS(bdcf_log_cf(catalog_lookup("cosh").log_cf, 0.0), freeid::PreconditionViolation);
}

TEST_CASE("levy exponent decay") {
  const std::vector<double> grid = {10, 20, 40, 80, 160, 200};
  const auto v = check_levy_decay(catalog_lookup("laplace").log_cf, 1.0, 0.1, grid);
  REQUIRE(v.size() == grid.size());
  // Reference: 200 e^{-20} log(40001).
  CHECK(v.back() == doctest::Approx(4.3682687187951346347e-6).epsilon(1e-12));
  // Large t stays finite where |Phi| alone would be harmless but e^{-c2 t} underflows.
  const std::vector<double> far = {1e3, 1e4};
  for (double x : check_levy_decay(catalog_lookup("cosh").log_cf, 2.0, 1.0, far)) {
    CHECK(std::isfinite(x));
    CHECK(x >= 0.0);
  }
  const std::vector<double> bad = {2, 1};
  CHECK_THROWS_AS(check_levy_decay(catalog_lookup("cosh").log_cf, 1, 1, bad),
                  freeid::PreconditionViolation);
  CHECK_THROWS_AS(check_levy_decay(catalog_lookup("cosh").log_cf, 0, 1, grid),
                  freeid::PreconditionViolation);
}
