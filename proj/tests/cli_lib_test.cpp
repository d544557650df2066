#include <cmath>
#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "hw/config.hpp"
#include "hw/errors.hpp"
#include "hw/parallel.hpp"
#include "hw/report.hpp"
#include "hw/suites.hpp"
#include "json.hpp"

using namespace hw;

TEST_CASE("config text") {
  RunConfig cfg;
  apply_config_text("# comment\nn = 2\ngrid_N=256\n\nformat = json  # trailing\ntolerance = 1e-3\n", cfg);
  CHECK(cfg.n == 2);
  CHECK(cfg.grid_N == 256);
  CHECK(cfg.format == "json");
  CHECK(cfg.tolerance == 1e-3);
  CHECK_NOTHROW(cfg.validate());
  CHECK_THROWS_AS(apply_config_text("colour = red\n", cfg), ConfigError);
  CHECK_THROWS_AS(apply_config_text("n = two\n", cfg), ConfigError);
  CHECK_THROWS_AS(apply_config_text("just words\n", cfg), ConfigError);
  RunConfig bad;
  bad.format = "xml";
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = {};
  bad.grid_N = 7;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  CHECK_THROWS_AS(apply_config_file("/nonexistent/hw.cfg", bad), ConfigError);
}

TEST_CASE("config snapshot round trip") {
  RunConfig a;
  a.rel_tol = 3e-12;
  a.output_dir = "out";
  RunConfig b;
  for (const auto& [k, v] : a.snapshot()) b.set(k, v);
  CHECK(b.rel_tol == a.rel_tol);
  CHECK(b.output_dir == "out");
  CHECK(b.snapshot() == a.snapshot());
}

TEST_CASE("cells print with 17 significant digits") {
  CHECK(format_cell(0.1) == "0.10000000000000001");
  CHECK(format_cell(2.0) == "2");
  CHECK(format_cell(std::string("a;b")) == "a;b");
  CHECK(format_cell(7LL) == "7");
  CHECK(format_cell(std::nan("")) == "nan");
  CHECK(std::stod(format_cell(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("estimate table layout") {
  const auto rep = gevrey_scan(1.0, 0.5, 2, {1.0, 4.0, 9.0}, 1);
  const Table t = estimate_table({rep});
  std::ostringstream os;
  write_csv(os, t);
  const std::string csv = os.str();
  CHECK(csv.substr(0, csv.find('\n')) == "alpha,abs_alpha,s,r,rho,lhs,bound_core,c_emp");
  CHECK(t.rows.size() == two_slot_ladder(2, 1).size() * 3);
  for (const auto& row : t.rows)
    if (std::get<std::string>(row[0]) == "0;0") {
      const double lhs = std::get<double>(row[5]), rho = std::get<double>(row[4]);
      CHECK(std::get<double>(row[7]) == doctest::Approx(lhs * rho).epsilon(1e-14));
    }
}

TEST_CASE("eval table") {
  const Table t = eval_table(SymbolSpec{family::InversePower{1.0}, 2}, {1.0});
  CHECK(t.columns == std::vector<std::string>{"family", "param_name", "param", "n", "rho", "value"});
  CHECK(std::get<double>(t.rows[0][5]) == doctest::Approx(0.6321205588).epsilon(1e-9));
  CHECK(std::get<double>(eval_table(SymbolSpec{family::Heat{1.0}, 1}, {0.0}).rows[0][5]) ==
        doctest::Approx(0.6480543).epsilon(1e-7));
  CHECK(std::get<double>(eval_table(SymbolSpec{family::Projection{0}, 1}, {0.0}).rows[0][5]) == 2.0);
}

TEST_CASE("json envelope") {
  Report r;
  r.suite = "demo";
  r.table.columns = {"x", "label"};
  r.table.add({1.5, std::string("a")});
  r.summary = {{"worst", 0.25}};
  r.passed = false;
  std::ostringstream os;
  write_json_report(os, r, {"9.9", "2000-01-01T00:00:00Z", {{"n", "1"}}});
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["tool_version"] == "9.9");
  CHECK(j["suite"] == "demo");
  CHECK(j["config"]["n"] == "1");
  CHECK(j["passed"] == false);
  CHECK(j["records"][0]["x"] == 1.5);
  CHECK(j["records"][0]["label"] == "a");
  CHECK_THROWS_AS(r.table.add({1.0}), DomainError);
}

TEST_CASE("gr sample set") {
  const auto a = gr_identity_samples();
  CHECK(a.size() == 20);
  CHECK(a == gr_identity_samples());
  for (const auto& [mu, beta, nu] : a) {
    CHECK(beta > 0.0);
    CHECK(nu > -1.0);
    CHECK(mu > beta * nu);
  }
}

TEST_CASE("suites") {
  CHECK(suite_names().size() == 6);
  RunConfig cfg;
  CHECK_THROWS_AS(run_suite("nope", cfg), ConfigError);
  const Report arb = run_suite("arbitration", cfg);
  CHECK(arb.passed);
  CHECK(std::get<std::string>(arb.summary[1].second) == "BinomialFromProof");
  cfg.tolerance = 1e-30;
  CHECK_FALSE(run_suite("arbitration", cfg).passed);
  RunConfig two;
  two.n = 2;
  CHECK_THROWS_AS(run_suite("spectral", two), ConfigError);
}

TEST_CASE("thread count from the environment") {
  setenv("HW_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  setenv("HW_THREADS", "zz", 1);
  CHECK_THROWS_AS(worker_count(), ConfigError);
  setenv("HW_THREADS", "0", 1);
  CHECK(worker_count() >= 1);
  unsetenv("HW_THREADS");
}
