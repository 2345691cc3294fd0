#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "freeid/cli.hpp"
#include "freeid/voiculescu.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = freeid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("transform: closed form at a single point") {
  const auto r = run({"transform", "--dist", "cosh", "--route", "closed", "--t", "2:2:1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "t,re,im\n2,0,-0.38629436112\n");
}

TEST_CASE("transform: json rows, grids and routes") {
  auto r = run({"transform", "--dist", "sinh", "--route", "levelZ", "--t", "1:100:3", "--log",
                "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dist"] == "sinh");
  CHECK(j["route"] == "levelZ");
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][1]["t"].get<double>() == doctest::Approx(10.0));
  CHECK(j["rows"][2]["t"].get<double>() == 100.0);

  r = run({"transform", "--dist", "tanh", "--t", "1:3:3", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][1]["t"].get<double>() == 2.0);

  for (const char* name : {"cosh", "bdcf-cosh", "laplace", "bdcf-laplace"}) {
    CAPTURE(name);
    const auto closed = run({"transform", "--dist", name, "--t", "0.5:5:4", "--format", "json"});
    const auto thm2 = run({"transform", "--dist", name, "--route", "thm2", "--t", "0.5:5:4", "--format", "json"});
    const auto a = nlohmann::json::parse(closed.out)["rows"];
    const auto b = nlohmann::json::parse(thm2.out)["rows"];
    for (std::size_t i = 0; i < a.size(); ++i)
      CHECK(b[i]["im"].get<double>() == doctest::Approx(a[i]["im"].get<double>()).epsilon(1e-7));
  }
  r = run({"transform", "--dist", "cosh", "--t", "1:2:2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Im V") != std::string::npos);
}

TEST_CASE("usage errors exit 2 with a message on stderr") {
  auto r = run({"transform", "--dist", "nosuch", "--t", "1:2:2"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("unknown distribution 'nosuch'") != std::string::npos);
  r = run({"verify", "--suite", "nosuch"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown verification suite: nosuch") != std::string::npos);
  for (auto args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"transform"},
           {"transform", "--dist", "cosh", "--t", "2:1:3"},
           {"transform", "--dist", "cosh", "--t", "0:1:3"},
           {"transform", "--dist", "cosh", "--t", "1:2:0"},
           {"transform", "--dist", "cosh", "--t", "1:2"},
           {"transform", "--dist", "cosh", "--route", "magic"},
           {"verify", "--tol", "-1"},
           {"verify", "--format", "xml"}}) {
    CAPTURE(args.size());
    r = run(args);
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
  }
}

TEST_CASE("verify: json report and exit codes") {
  auto r = run({"verify", "--suite", "specfun-identities", "--tol", "1e-10", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n_fail"] == 0);
  CHECK(j["suite"] == "specfun-identities");
  CHECK(j["tol"].get<double>() == 1e-10);
  // An unreachable tolerance makes finite-difference-free cases fail.
  r = run({"verify", "--suite", "gr-table", "--tol", "1e-300", "--format", "csv"});
  CHECK(r.code == 1);
  CHECK(r.out.find(",false\n") != std::string::npos);
}

TEST_CASE("--out writes the bytes stdout would carry") {
  const auto path = std::filesystem::temp_directory_path() / "freeid_cli_out.json";
  const auto to_stdout = run({"transform", "--dist", "laplace", "--t", "1:4:4", "--format", "json"});
  const auto to_file = run({"transform", "--dist", "laplace", "--t", "1:4:4", "--format", "json",
                            "--out", path.string()});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == to_stdout.out);
  std::filesystem::remove(path);
}

TEST_CASE("catalog listing") {
  auto r = run({"catalog", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 8);
  CHECK(j[4]["bdcf_of"] == "cosh");
  r = run({"catalog"});
  CHECK(r.out.find("bdcf-laplace") != std::string::npos);
}

TEST_CASE("truncation override from the environment") {
  setenv("FREEID_TRUNCATION_DECADES", "abc", 1);
  auto r = run({"transform", "--dist", "cosh", "--route", "levelA", "--t", "1:1:1"});
  CHECK(r.code == 2);
  setenv("FREEID_TRUNCATION_DECADES", "60", 1);
  r = run({"transform", "--dist", "cosh", "--route", "levelA", "--t", "1:1:1", "--format", "csv"});
  CHECK(r.code == 0);
  unsetenv("FREEID_TRUNCATION_DECADES");
}
