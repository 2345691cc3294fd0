#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "freeid/catalog.hpp"
#include "freeid/errors.hpp"
#include "freeid/verify.hpp"

using namespace freeid::verify;

namespace {

const Report& all_report() {
  static const Report r = run_suite("all");
  return r;
}

bool has_case(const Report& r, const std::string& prefix) {
  return std::any_of(r.cases.begin(), r.cases.end(),
                     [&](const CheckCase& c) { return c.name.rfind(prefix, 0) == 0; });
}

}  // namespace

TEST_CASE("make_case pass rule") {
  auto c = make_case("s", "n", {}, cplx(1.0, 0.0), cplx(1.0 + 1.9e-6, 0.0), 1e-6);
  CHECK(c.pass);  // 1.9e-6 <= 1e-6 * (1 + 1.0000019)
  CHECK(c.abs_err == doctest::Approx(1.9e-6));
  CHECK(c.rel_err == doctest::Approx(1.9e-6).epsilon(1e-3));
  c = make_case("s", "n", {}, cplx(1.0, 0.0), cplx(1.0, 2.1e-6), 1e-6);
  CHECK(!c.pass);
  c = make_case("s", "n", {}, cplx(0.0), cplx(0.0), 1e-6);
  CHECK(c.pass);
  CHECK(c.rel_err == 0.0);
  c = make_case("s", "n", {}, cplx(NAN), cplx(0.0), 1e-6);
  CHECK(!c.pass);
}

TEST_CASE("table identities: reference values") {
  auto c = gr_table_check("4.342(2)", {{"xi", 2.0}});
  CHECK(c.pass);
  CHECK(c.lhs.real() == doctest::Approx(0.096573590279972654709).epsilon(1e-10));
  c = gr_table_check("3.522(2)", {{"b", 1.0}});
  CHECK(c.pass);
  CHECK(c.rhs.real() == doctest::Approx(0.19314718055994530942).epsilon(1e-12));
  c = gr_table_check("remark6c", {});
  CHECK(c.pass);
  CHECK(c.lhs.real() == doctest::Approx(0.036489973978576520559).epsilon(1e-10));
  CHECK(c.tol == 1e-8);
}

TEST_CASE("table identities: every id passes on a parameter point") {
  for (const auto& id : gr_identity_ids()) {
    CAPTURE(id);
    Params p;
    for (const char* k : {"xi", "b", "beta", "mu", "t"}) p[k] = 1.5;
    if (id == "3.551(3)") p["mu"] = 2.0;
    const auto c = gr_table_check(id, p);
    if (id.find("printed") != std::string::npos) {
      CHECK(!c.pass);
    } else {
      CHECK(c.pass);
    }
  }
  CHECK_THROWS_AS(gr_table_check("9.999", {}), freeid::UnknownIdentity);
  CHECK_THROWS_AS(gr_table_check("4.342(2)", {}), std::invalid_argument);
  CHECK_THROWS_AS(gr_table_check("4.342(2)", {{"xi", -1.0}}), std::invalid_argument);
}

TEST_CASE("suite registry and tolerances") {
  CHECK(suite_names().back() == "all");
  CHECK(default_tolerance("specfun-identities") == 1e-10);
  CHECK(default_tolerance("gr-table") == 1e-8);
  CHECK(default_tolerance("corollary1") == 1e-7);
  CHECK(default_tolerance("routes") == 1e-6);
  CHECK_THROWS_AS(run_suite("nosuch"), freeid::UnknownSuite);
  CHECK_THROWS_AS(default_tolerance("nosuch"), freeid::UnknownSuite);
  CHECK_THROWS(run_suite("decay", 0.0));
  const auto r = run_suite("decay", 1e-3);
  CHECK(r.tol == 1e-3);
  for (const auto& c : r.cases) CHECK(c.tol == 1e-3);
}

TEST_CASE("every suite passes at its default tolerance") {
  const auto& r = all_report();
  for (const auto& c : r.cases) {
    CAPTURE(c.name);
    CAPTURE(c.note);
    CHECK(c.pass);
  }
  CHECK(r.n_fail == 0);
  CHECK(r.n_pass + r.n_fail == static_cast<int>(r.cases.size()));
  REQUIRE(!r.informational.empty());
  for (const auto& c : r.informational) CHECK(!c.pass);
}

TEST_CASE("'all' is the union of the suites without duplicates") {
  const auto& all = all_report();
  std::set<std::string> names;
  for (const auto& c : all.cases) CHECK(names.insert(c.name).second);
  std::size_t total = 0;
  for (const auto& s : suite_names()) {
    if (s == "all") continue;
    const auto r = run_suite(s);
    total += r.cases.size();
    CHECK(!r.cases.empty());
    for (const auto& c : r.cases) {
      CHECK(names.count(c.name) == 1);
      CHECK(c.suite == s);
    }
  }
  CHECK(total == all.cases.size());
}

TEST_CASE("coverage: every closed form is exercised") {
  const auto& r = all_report();
  for (const auto& e : freeid::measures::catalog()) {
    CAPTURE(e.name);
    REQUIRE(e.closed_v);
    CHECK(has_case(r, "routes/" + e.name + "/closed-vs-A"));
    CHECK(has_case(r, "routes/" + e.name + "/A-vs-Z"));
    CHECK(has_case(r, "routes/" + e.name + "/symZ-vs-Z"));
    CHECK(has_case(r, "routes/" + e.name + "/levy-exponent-vs-log-cf"));
    CHECK(has_case(r, "decay/" + e.name + "@"));
    if (!e.bdcf_of) {
      CHECK(has_case(r, "bdcf/" + e.name + "/thm2-forward-vs-closed"));
      CHECK(has_case(r, "bdcf/" + e.name + "/thm2-inverse-vs-closed"));
    }
  }
  for (const auto& id : gr_identity_ids()) {
    CAPTURE(id);
    const bool found = has_case(r, "gr/" + id + "@") || has_case(r, "gr/" + id + "") ||
                       std::any_of(r.informational.begin(), r.informational.end(),
                                   [&](const CheckCase& c) { return c.name.rfind("gr/" + id + "@", 0) == 0; });
    CHECK(found);
  }
}

TEST_CASE("determinism") {
  auto a = run_suite("gr-table");
  auto b = run_suite("gr-table");
  a.created_at = b.created_at = "";
  CHECK(emit_report(a, Format::Json) == emit_report(b, Format::Json));
}

TEST_CASE("JSON round trip is lossless") {
  Report r;
  r.suite = "x";
  r.tol = 1e-7;
  r.created_at = utc_timestamp();
  r.cases.push_back(make_case("x", "a,b \"q\"", {{"t", 0.1}}, cplx(1.0 / 3, -2e-300), cplx(0.1), 1e-7));
  r.cases.push_back(make_case("x", "nan", {}, cplx(NAN), cplx(1.0), 1e-7));
  r.cases.back().note = "boom";
  r.informational.push_back(make_case("x", "i", {}, cplx(1), cplx(2), 1e-7));
  r.n_pass = 0;
  r.n_fail = 2;
  const auto text = emit_report(r, Format::Json);
  const auto back = parse_report_json(text);
  CHECK(emit_report(back, Format::Json) == text);
  CHECK(back.cases[0].lhs == r.cases[0].lhs);
  CHECK(back.cases[0].params.at("t") == 0.1);
  CHECK(std::isnan(back.cases[1].lhs.real()));
  CHECK(back.cases[1].note == "boom");
  CHECK(back.informational.size() == 1);
  CHECK(r.created_at.size() == 20);
  CHECK(r.created_at.back() == 'Z');
}

TEST_CASE("empty report and CSV/table formats") {
  Report r;
  r.suite = "empty";
  const auto json = emit_report(r, Format::Json);
  CHECK(json.find("\"cases\": []") != std::string::npos);
  CHECK(json.find("\"n_pass\": 0") != std::string::npos);
  CHECK(json.find("\"suite\": \"empty\"") < json.find("\"cases\""));
  CHECK(emit_report(r, Format::Csv) == "name,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass\n");

  r.cases.push_back(make_case("s", "one", {{"t", 2.0}}, cplx(1.0), cplx(1.0), 1e-6));
  r.n_pass = 1;
  const auto csv = emit_report(r, Format::Csv);
  CHECK(csv == "name,t,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass\none,2,1,0,1,0,0,0,true\n");
  const auto table = emit_report(r, Format::Table);
  CHECK(table.find("one") != std::string::npos);
  CHECK(table.find("PASS") != std::string::npos);
  CHECK(table.find("1 passed, 0 failed") != std::string::npos);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(!parse_format("xml"));
}
