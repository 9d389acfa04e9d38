#include "doctest.h"

#include "sl2q/report.hpp"
#include "sl2q/suites.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace sl2q;

namespace {
Report sample_report() {
  Report r;
  r.add({"grid", "residual, N=256", 4.8e-13, 1e-6, true, 1.25, ""});
  r.add({"thm52", "equivariance \"F\"", 0.82, 1e-2, false, 3.5, "odd ell"});
  return r;
}
std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("empty report") {
  CHECK(report_json(Report{}) == "[]\n");
  CHECK(parse_report_json("[]").checks.empty());
  CHECK(Report{}.all_pass());
}

TEST_CASE("json round trip and key order") {
  Report r = sample_report();
  std::string js = report_json(r);
  CHECK(js.find("\"suite\"") < js.find("\"check\""));
  CHECK(js.find("\"check\"") < js.find("\"residual\""));
  CHECK(js.find("\"pass\"") < js.find("\"seconds\""));
  Report back = parse_report_json(js);
  REQUIRE(back.checks.size() == 2);
  CHECK(back.checks[1].check == r.checks[1].check);
  CHECK(back.checks[0].residual == r.checks[0].residual);
  CHECK(back.checks[1].note == "odd ell");
  CHECK_FALSE(back.all_pass());
  CHECK(report_json(back) == js);
}

TEST_CASE("csv rows and timing switch") {
  Report r = sample_report();
  std::string csv = report_csv(r);
  int rows = 0;
  for (char c : csv) rows += c == '\n';
  CHECK(rows == 1 + static_cast<int>(r.checks.size()));
  CHECK(csv.find("\"equivariance \"\"F\"\"\"") != std::string::npos);
  CHECK(report_json(r, false).find("1.25") == std::string::npos);
  std::string path = "sl2q_test_report.csv";
  emit_report(r, path);
  CHECK(slurp(path) == csv);
  std::remove(path.c_str());
  CHECK_THROWS_AS(emit_report(r, "/nonexistent-dir/x.json"), std::runtime_error);
}

TEST_CASE("suite configuration") {
  std::string path = "sl2q_test.cfg";
  {
    std::ofstream out(path);
    out << "# comment\nsuite = grid\nnu = 2/5\ngrid_n = 64   # inline\nseed = 9\nbranch = O2\n";
  }
  SuiteConfig cfg;
  apply_config_file(path, cfg);
  CHECK(cfg.suite == "grid");
  CHECK(cfg.nu == "2/5");
  CHECK(cfg.grid_n == 64);
  CHECK(cfg.seed == 9);
  CHECK(cfg.branch == "O2");
  validate(cfg);
  {
    std::ofstream out(path);
    out << "bogus = 1\n";
  }
  CHECK_THROWS_AS(apply_config_file(path, cfg), std::invalid_argument);
  std::remove(path.c_str());

  SuiteConfig bad;
  bad.suite = "nonesuch";
  CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
  bad = SuiteConfig{};
  bad.nu = "1/0";
  CHECK_THROWS(validate(bad));
  bad = SuiteConfig{};
  bad.grid_n = 100;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = SuiteConfig{};
  bad.ell = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("exact suites are deterministic and pass") {
  SuiteConfig cfg;
  cfg.timing = false;
  for (const char* s : {"covariance", "thm42", "flows"}) {
    cfg.suite = s;
    Report a = run_suite(cfg), b = run_suite(cfg);
    CHECK(a.all_pass());
    CHECK(report_json(a) == report_json(b));
  }
  cfg.suite = "covariance";
  CHECK(run_suite(cfg).checks.size() == 9);
}
