#include "freeid/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "freeid/catalog.hpp"
#include "freeid/errors.hpp"
#include "freeid/verify.hpp"
#include "freeid/voiculescu.hpp"

namespace freeid::cli {
namespace {

using json = nlohmann::ordered_json;
using voiculescu::cplx;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
};

TSpec parse_tspec(const std::string& s) {
  TSpec spec;
  char tail = 0;
  if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &spec.start, &spec.stop, &spec.count, &tail) != 3) {
    throw UsageError("--t expects start:stop:count, got '" + s + "'");
  }
  if (!(spec.start > 0.0) || !(spec.stop >= spec.start) || !std::isfinite(spec.stop) || spec.count < 1) {
    throw UsageError("--t requires 0 < start <= stop and count >= 1");
  }
  return spec;
}

std::vector<double> t_grid(const TSpec& s, bool log_spacing) {
  std::vector<double> out;
  if (s.count == 1) return {s.start};
  for (int i = 0; i < s.count; ++i) {
    const double u = double(i) / (s.count - 1);
    out.push_back(log_spacing ? s.start * std::pow(s.stop / s.start, u)
                              : s.start + (s.stop - s.start) * u);
  }
  out.back() = s.stop;
  return out;
}

std::string g12(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

quad::QuadConfig config_from_env() {
  quad::QuadConfig cfg;
  if (const char* env = std::getenv("FREEID_TRUNCATION_DECADES")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      throw UsageError(std::string("FREEID_TRUNCATION_DECADES must be a positive number, got '") +
                       env + "'");
    }
    cfg.truncation_decades = v;
  }
  return cfg;
}

voiculescu::VoiculescuFn route_fn(const std::string& dist, const std::string& route,
                                  const quad::QuadConfig& cfg) {
  using namespace voiculescu;
  const auto& e = measures::catalog_lookup(dist);
  if (route == "levelA") return level_a_fn(e.log_cf, cfg);
  if (route == "levelZ") return level_z_fn(e.pair, cfg);
  if (route == "symZ") return level_z_symmetric_fn(e.pair, cfg);
  if (route == "closed") {
    if (!e.closed_v) throw NoClosedForm(dist);
    return *e.closed_v;
  }
  // thm2: forward from the parent law, or inverse from the driver.
  if (e.bdcf_of) {
    const auto parent = closed_fn(*e.bdcf_of);
    return {[parent](double t) { return thm2_forward(parent, t); }, Source::Thm2};
  }
  const auto driver = measures::driver_of(dist);
  if (!driver) throw NoClosedForm(dist);
  const auto v_psi = closed_fn(*driver);
  const cplx v1 = closed_form(dist, 1.0);
  return {[v_psi, v1, cfg](double t) { return thm2_inverse(v_psi, v1, t, cfg); }, Source::Thm2};
}

std::string transform_output(const std::string& dist, const std::string& route,
                             const std::vector<double>& ts, const std::vector<cplx>& vs,
                             verify::Format format) {
  std::ostringstream os;
  switch (format) {
    case verify::Format::Json: {
      json rows = json::array();
      for (std::size_t i = 0; i < ts.size(); ++i) {
        rows.push_back({{"t", std::stod(g12(ts[i]))},
                        {"re", std::stod(g12(vs[i].real()))},
                        {"im", std::stod(g12(vs[i].imag()))}});
      }
      os << json{{"dist", dist}, {"route", route}, {"rows", rows}}.dump(2) << '\n';
      break;
    }
    case verify::Format::Csv:
      os << "t,re,im\n";
      for (std::size_t i = 0; i < ts.size(); ++i)
        os << g12(ts[i]) << ',' << g12(vs[i].real()) << ',' << g12(vs[i].imag()) << '\n';
      break;
    case verify::Format::Table: {
      char line[128];
      std::snprintf(line, sizeof line, "%-20s %-20s %-20s\n", "t", "Re V", "Im V");
      os << line;
      for (std::size_t i = 0; i < ts.size(); ++i) {
        std::snprintf(line, sizeof line, "%-20s %-20s %-20s\n", g12(ts[i]).c_str(),
                      g12(vs[i].real()).c_str(), g12(vs[i].imag()).c_str());
        os << line;
      }
      break;
    }
  }
  return os.str();
}

std::string catalog_output(verify::Format format) {
  std::ostringstream os;
  if (format == verify::Format::Json) {
    json entries = json::array();
    for (const auto& e : measures::catalog()) {
      entries.push_back({{"name", e.name},
                         {"description", e.description},
                         {"log_cf", e.log_cf_text},
                         {"density", e.density_text},
                         {"closed_form", e.closed_text},
                         {"bdcf_of", e.bdcf_of ? json(*e.bdcf_of) : json(nullptr)},
                         {"symmetric", e.log_cf.symmetric}});
    }
    os << entries.dump(2) << '\n';
  } else if (format == verify::Format::Csv) {
    os << "name,bdcf_of,symmetric\n";
    for (const auto& e : measures::catalog())
      os << e.name << ',' << e.bdcf_of.value_or("") << ',' << (e.log_cf.symmetric ? "true" : "false")
         << '\n';
  } else {
    for (const auto& e : measures::catalog()) {
      os << e.name << "  " << e.description << '\n'
         << "  log phi(t) = " << e.log_cf_text << '\n'
         << "  m(dx)      = " << e.density_text << '\n'
         << "  V(it)      = " << e.closed_text << '\n';
    }
  }
  return os.str();
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Voiculescu transforms of classical infinitely divisible laws"};
  app.require_subcommand(1);
  std::string dist, route = "closed", tspec = "1:10:10", suite = "all", format = "table", out_path;
  bool log_spacing = false;
  std::optional<double> tol;

  auto* transform = app.add_subcommand("transform", "Evaluate V(it) on a t-grid");
  transform->add_option("--dist", dist, "Catalog entry")->required();
  transform->add_option("--route", route, "levelA | levelZ | symZ | closed | thm2")
      ->check(CLI::IsMember({"levelA", "levelZ", "symZ", "closed", "thm2"}));
  transform->add_option("--t", tspec, "start:stop:count");
  transform->add_flag("--log", log_spacing, "Logarithmic spacing");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "Suite name");
  verify_cmd->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber);

  auto* catalog_cmd = app.add_subcommand("catalog", "List catalog entries");

  for (auto* sub : {transform, verify_cmd, catalog_cmd}) {
    sub->add_option("--format", format, "table | csv | json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--out", out_path, "Write output to a file");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const auto fmt = *verify::parse_format(format);
  int code = 0;
  std::string text;
  try {
    const auto cfg = config_from_env();
    if (*transform) {
      const auto spec = parse_tspec(tspec);
      const auto fn = route_fn(dist, route, cfg);
      const auto ts = t_grid(spec, log_spacing);
      std::vector<cplx> vs;
      for (double t : ts) vs.push_back(fn(t));
      text = transform_output(dist, route, ts, vs, fmt);
    } else if (*verify_cmd) {
      const auto report = verify::run_suite(suite, tol, cfg);
      text = verify::emit_report(report, fmt);
      if (report.n_fail > 0) code = 1;
    } else {
      text = catalog_output(fmt);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnknownDistribution& e) {
    err << "error: unknown distribution '" << e.name() << "'\n";
    return 2;
  } catch (const UnknownSuite& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    file << text;
    if (!file) {
      err << "error: cannot write " << out_path << '\n';
      return 1;
    }
  }
  return code;
}

}  // namespace freeid::cli
