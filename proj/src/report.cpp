#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "freeid/verify.hpp"

namespace freeid::verify {
namespace {

using json = nlohmann::ordered_json;

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double get_num(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json case_json(const CheckCase& c) {
  json params = json::object();
  for (const auto& [k, v] : c.params) params[k] = num(v);
  return json{{"name", c.name},
              {"suite", c.suite},
              {"params", params},
              {"lhs", {num(c.lhs.real()), num(c.lhs.imag())}},
              {"rhs", {num(c.rhs.real()), num(c.rhs.imag())}},
              {"abs_err", num(c.abs_err)},
              {"rel_err", num(c.rel_err)},
              {"tol", num(c.tol)},
              {"pass", c.pass},
              {"note", c.note}};
}

CheckCase case_from(const json& j) {
  CheckCase c;
  c.name = j.at("name").get<std::string>();
  c.suite = j.at("suite").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) c.params[k] = get_num(v);
  c.lhs = {get_num(j.at("lhs").at(0)), get_num(j.at("lhs").at(1))};
  c.rhs = {get_num(j.at("rhs").at(0)), get_num(j.at("rhs").at(1))};
  c.abs_err = get_num(j.at("abs_err"));
  c.rel_err = get_num(j.at("rel_err"));
  c.tol = get_num(j.at("tol"));
  c.pass = j.at("pass").get<bool>();
  c.note = j.value("note", "");
  return c;
}

std::string g12(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string emit_json(const Report& r) {
  json cases = json::array();
  for (const auto& c : r.cases) cases.push_back(case_json(c));
  json info = json::array();
  for (const auto& c : r.informational) info.push_back(case_json(c));
  json j{{"suite", r.suite},
         {"tol", r.tol},
         {"config",
          {{"rel_tol", r.config.rel_tol},
           {"abs_tol", r.config.abs_tol},
           {"max_subdivisions", r.config.max_subdivisions},
           {"truncation_decades", r.config.truncation_decades}}},
         {"created_at", r.created_at},
         {"n_pass", r.n_pass},
         {"n_fail", r.n_fail},
         {"cases", cases},
         {"informational", info}};
  return j.dump(2) + "\n";
}

std::string emit_csv(const Report& r) {
  std::set<std::string> keys;
  for (const auto& c : r.cases)
    for (const auto& [k, v] : c.params) keys.insert(k);
  std::ostringstream os;
  os << "name";
  for (const auto& k : keys) os << ',' << k;
  os << ",lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass\n";
  for (const auto& c : r.cases) {
    os << csv_field(c.name);
    for (const auto& k : keys) {
      os << ',';
      if (auto it = c.params.find(k); it != c.params.end()) os << g12(it->second);
    }
    os << ',' << g12(c.lhs.real()) << ',' << g12(c.lhs.imag()) << ',' << g12(c.rhs.real()) << ','
       << g12(c.rhs.imag()) << ',' << g12(c.abs_err) << ',' << g12(c.rel_err) << ','
       << (c.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string complex_text(cplx z) { return g12(z.real()) + (z.imag() < 0 ? "" : "+") + g12(z.imag()) + "i"; }

std::string emit_table(const Report& r) {
  std::size_t w = 4;
  for (const auto& c : r.cases) w = std::max(w, c.name.size());
  std::ostringstream os;
  auto pad = [](std::string s, std::size_t n) {
    s.resize(std::max(s.size(), n), ' ');
    return s;
  };
  os << pad("name", w) << "  " << pad("lhs", 40) << "  " << pad("rhs", 40) << "  "
     << pad("abs_err", 12) << "  result\n";
  auto row = [&](const CheckCase& c, const char* verdict) {
    os << pad(c.name, w) << "  " << pad(complex_text(c.lhs), 40) << "  "
       << pad(complex_text(c.rhs), 40) << "  " << pad(g12(c.abs_err), 12) << "  " << verdict;
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << '\n';
  };
  for (const auto& c : r.cases) row(c, c.pass ? "PASS" : "FAIL");
  for (const auto& c : r.informational) row(c, "INFO");
  os << "suite " << r.suite << ": " << r.n_pass << " passed, " << r.n_fail << " failed";
  if (!r.informational.empty()) os << ", " << r.informational.size() << " informational";
  os << '\n';
  return os.str();
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  return std::nullopt;
}

std::string emit_report(const Report& r, Format format) {
  switch (format) {
    case Format::Json: return emit_json(r);
    case Format::Csv: return emit_csv(r);
    case Format::Table: return emit_table(r);
  }
  return {};
}

Report parse_report_json(std::string_view text) {
  const json j = json::parse(text);
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.tol = j.at("tol").get<double>();
  const auto& cfg = j.at("config");
  r.config.rel_tol = cfg.at("rel_tol").get<double>();
  r.config.abs_tol = cfg.at("abs_tol").get<double>();
  r.config.max_subdivisions = cfg.at("max_subdivisions").get<int>();
  r.config.truncation_decades = cfg.at("truncation_decades").get<double>();
  r.created_at = j.at("created_at").get<std::string>();
  r.n_pass = j.at("n_pass").get<int>();
  r.n_fail = j.at("n_fail").get<int>();
  for (const auto& c : j.at("cases")) r.cases.push_back(case_from(c));
  if (j.contains("informational"))
    for (const auto& c : j.at("informational")) r.informational.push_back(case_from(c));
  return r;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace freeid::verify
