#pragma once

// Verification suites: each case evaluates two independent routes to the
// same quantity and records their agreement.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freeid/quad.hpp"

namespace freeid::verify {

using cplx = std::complex<double>;
using Params = std::map<std::string, double>;
using quad::QuadConfig;

struct CheckCase {
  std::string suite;
  std::string name;
  Params params;
  cplx lhs;
  cplx rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  // pass <=> abs_err <= tol * (1 + max(|lhs|, |rhs|))
  bool pass = false;
  std::string note;  // failure reason or explanation; empty when nothing to say
};

/// Computes the error fields and the pass flag.
CheckCase make_case(std::string suite, std::string name, Params params, cplx lhs, cplx rhs,
                    double tol);

struct Report {
  std::string suite;
  double tol = 0.0;
  QuadConfig config;
  std::string created_at;  // RFC 3339, UTC
  std::vector<CheckCase> cases;
  // Cases expected to disagree (e.g. a misprinted table entry); they do not
  // count towards n_pass / n_fail.
  std::vector<CheckCase> informational;
  int n_pass = 0;
  int n_fail = 0;
};

/// Suite identifiers accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Default tolerance of a suite: 1e-10 for special-function identities,
/// 1e-8 for single quadratures, 1e-7 for nested quadrature and 1e-6 for
/// route comparisons and finite differences.
double default_tolerance(std::string_view suite);

/// Runs a suite. Each case uses max(tol, its method floor) where the floor
/// is the accuracy limit of a finite-difference or nested-quadrature route.
/// Without tol every sub-suite uses its default. Throws UnknownSuite.
Report run_suite(std::string_view suite, std::optional<double> tol = std::nullopt,
                 const QuadConfig& cfg = {});

/// Identifiers of the definite-integral table identities.
const std::vector<std::string>& gr_identity_ids();

/// Quadrature of the printed integral against the printed closed form.
/// Throws UnknownIdentity; quadrature failures become failed cases.
CheckCase gr_table_check(std::string_view id, const Params& params, const QuadConfig& cfg = {},
                         double tol = 1e-8);

enum class Format { Json, Csv, Table };

std::optional<Format> parse_format(std::string_view s);
std::string emit_report(const Report& r, Format format);

/// Inverse of emit_report(r, Format::Json).
Report parse_report_json(std::string_view json);

std::string utc_timestamp();

}  // namespace freeid::verify
