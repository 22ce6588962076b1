#include <doctest.h>

#include <json.hpp>

#include "commands.hpp"
#include "jobconfig.hpp"

using latsum::cli::JobConfig;
using nlohmann::json;

TEST_SUITE_BEGIN("cli");

TEST_CASE("config round-trips through its canonical text") {
  JobConfig cfg;
  cfg.command = "S";
  cfg.lattice = "hex";
  cfg.tau = {0.5, 0.8660254037844386};
  cfg.a = 2.5;
  cfg.l = 2;
  cfg.m = 0;
  cfg.n = 6;
  cfg.u = {0.05, 0.1, 0.2};
  cfg.set = "M";
  cfg.format = "json";
  cfg.regularized = true;
  const std::string text = cfg.canonical_text();
  const JobConfig back = JobConfig::parse_canonical(text);
  CHECK(back.canonical_text() == text);
  CHECK(back.command == "S");
  CHECK(back.u.size() == 3);
  CHECK(back.set == "M");

  JobConfig cfg2;
  cfg2.command = "sigma";
  cfg2.tau = {0.3, 1.2};
  cfg2.n = 2;
  cfg2.m = 4;
  cfg2.regularized = false;
  cfg2.verify_oracle = true;
  const std::string t2 = cfg2.canonical_text();
  CHECK(JobConfig::parse_canonical(t2).canonical_text() == t2);
}

TEST_CASE("json and csv renderings encode identical values") {
  JobConfig cfg;
  cfg.command = "sigma";
  cfg.lattice = "square";
  cfg.resolve_lattice();
  cfg.n = 2;
  cfg.m = 4;
  const json rep = latsum::cli::cmd_sigma(cfg);
  const std::string csv = latsum::cli::render_csv(rep);

  // pull value.re out of the csv and compare bit-for-bit with the json
  const std::string key = "\nvalue.re,";
  const auto pos = csv.find(key);
  REQUIRE(pos != std::string::npos);
  const auto eol = csv.find('\n', pos);
  const double from_csv = std::stod(csv.substr(pos + key.size(), eol - pos - key.size()));
  CHECK(from_csv == rep["value"]["re"].get<double>());

  const std::string key2 = "extraordinary.re,";
  const auto pos2 = csv.find(key2);
  REQUIRE(pos2 != std::string::npos);
  const auto eol2 = csv.find('\n', pos2);
  const double x_csv = std::stod(csv.substr(pos2 + key2.size(), eol2 - pos2 - key2.size()));
  CHECK(x_csv == rep["extraordinary"]["re"].get<double>());
}

TEST_CASE("sigma command reports the regularized square value with its extraordinary term") {
  JobConfig cfg;
  cfg.command = "sigma";
  cfg.lattice = "square";
  cfg.resolve_lattice();
  cfg.n = 2;
  cfg.m = 4;
  const json rep = latsum::cli::cmd_sigma(cfg);
  CHECK(rep["value"]["re"].get<double>() == doctest::Approx(2.507654834366506).epsilon(1e-12));
  CHECK(rep["extraordinary"]["re"].get<double>() ==
        doctest::Approx(3.14159265358979 / 2).epsilon(1e-12));
  CHECK(rep["convergence"].get<std::string>() == "regularized");
  CHECK(rep.contains("formula"));
}

TEST_CASE("S command renders the diagonal closed form") {
  JobConfig cfg;
  cfg.command = "S";
  cfg.lattice = "square";
  cfg.resolve_lattice();
  cfg.l = 2;
  cfg.m = 0;
  cfg.n = 2;
  const json rep = latsum::cli::cmd_S(cfg);
  REQUIRE(rep["terms"].size() == 2);
  CHECK(rep["terms"][0]["coeff"]["re"].get<double>() ==
        doctest::Approx(1.0 / (4 * 3.14159265358979324)).epsilon(1e-13));
  CHECK(rep["terms"][1]["coeff"]["re"].get<double>() == doctest::Approx(-0.125).epsilon(1e-14));
}

TEST_CASE("table1 command passes its own gate") {
  JobConfig cfg;
  cfg.command = "table1";
  const json rep = latsum::cli::cmd_table1(cfg);
  CHECK(rep["entries"].size() == 24);
  CHECK(rep["passed"].get<bool>());
  CHECK(rep["max_rel_diff"].get<double>() <= 1e-12);
}

TEST_SUITE_END();
