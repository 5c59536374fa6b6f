#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "husimi/cli.hpp"
#include "husimi/report.hpp"

using namespace husimi;

namespace {
struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("husimi_cli_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}
}  // namespace

TEST_CASE("eval") {
  const Result r = call({"eval", "--model", "hermite", "--n", "0", "--x", "0", "--p", "0", "--g", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "0.15915494309189535\n");
  const Result s = call({"eval", "--model", "semiconfined", "--a", "1", "--n", "0"});
  CHECK(r.code == 0);
  CHECK(std::stod(s.out) == doctest::Approx(0.1321328202579876797837378).epsilon(1e-12));
}

TEST_CASE("spectrum") {
  const Result r = call({"spectrum", "--model", "semiconfined", "--a", "1", "--g", "0", "--n-max", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,energy\n0,0.5\n1,1.5\n2,2.5\n");
}

TEST_CASE("argument and domain errors exit with 2") {
  CHECK(call({"eval", "--model", "semiconfined", "--n", "0"}).code == 2);
  CHECK(call({"eval", "--model", "hermite", "--a", "2"}).code == 2);
  CHECK(call({"eval", "--bogus"}).code == 2);
  CHECK(call({"eval", "--model", "quartic"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"eval", "--model", "semiconfined", "--a", "1", "--g", "-3"}).code == 2);
  CHECK(call({"grid", "--x-min", "1", "--x-max", "0"}).code == 2);
  const Result r = call({"eval", "--model", "semiconfined"});
  CHECK(r.err.find('\n') == r.err.size() - 1);  // one-line diagnostic
}

TEST_CASE("grid csv and document") {
  const Result csv = call({"grid", "--model", "semiconfined", "--a", "2", "--n", "1", "--x-steps", "3", "--p-steps",
                           "4"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "x,p,value");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 12);

  const Result doc = call({"grid", "--model", "hermite", "--g", "1", "--x-steps", "3", "--p-steps", "2", "--format",
                           "doc"});
  REQUIRE(doc.code == 0);
  const auto j = nlohmann::json::parse(doc.out);
  CHECK(j["metadata"]["model"] == "hermite");
  CHECK(j["metadata"]["params"]["g"] == 1.0);
  CHECK(j["metadata"]["params"]["a"].is_null());
  CHECK(j["metadata"]["version"] == HUSIMI_VERSION);
  CHECK(j["values"].size() == 6);
}

TEST_CASE("grid output is byte-identical across runs") {
  const auto dir = scratch("determinism");
  std::filesystem::create_directories(dir);
  const std::vector<std::string> base{"grid", "--model", "semiconfined", "--a", "0.5", "--g", "1", "--n", "2",
                                      "--x-steps", "9", "--p-steps", "9", "--out"};
  auto a = base, b = base;
  a.push_back((dir / "a.csv").string());
  b.push_back((dir / "b.csv").string());
  REQUIRE(call(a).code == 0);
  REQUIRE(call(b).code == 0);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("figures writes twelve grids") {
  const auto dir = scratch("figures");
  const Result r = call({"figures", "--out", dir.string(), "--steps", "5"});
  REQUIRE(r.code == 0);
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    (void)e;
    ++files;
  }
  CHECK(files == 12);
  CHECK(std::filesystem::exists(dir / "husimi_n0_a0.5_g0.csv"));
  CHECK(std::filesystem::exists(dir / "husimi_n1_a12_g1.csv"));
  const std::string first = slurp(dir / "husimi_n1_a2_g0.csv");
  CHECK(first.rfind("x,p,value\n-0.60000000000000009,-5,", 0) == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("figure grid clips x to the support") {
  const GridSpec g = cli::figure_grid(0.5);
  CHECK(g.x_min > -0.5);
  CHECK(g.x_max == 5.0);
  CHECK(g.x_steps == 201);
  CHECK(cli::figure_grid(12.0).x_min == -5.0);
}

TEST_CASE("report formats") {
  oracle::VerificationReport r{"demo/check", 1.5e-9, 2e-10, 7, true, "tol=1e-8"};
  CHECK(report::to_text_line(r) == "PASS demo/check max_abs=1.5e-09 max_rel=2.0000000000000001e-10 points=7 tol=1e-8");
  r.pass = false;
  std::ostringstream os;
  report::write_document(os, {r});
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["pass"] == false);
  CHECK(j["reports"][0]["name"] == "demo/check");
  CHECK(report::format_number(0.1) == "0.10000000000000001");

  std::vector<oracle::VerificationReport> v{{"b", 0, 0, 0, true, ""}, {"a", 0, 0, 0, true, ""}};
  report::sort_by_name(v);
  CHECK(v[0].name == "a");
}
