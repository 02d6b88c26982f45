#include "anselberg/report.hpp"

#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>

using namespace anselberg;

namespace {

ConfigMap with(ConfigMap over) { return merge_config(default_config(), over); }

} // namespace

TEST_CASE("config parsing and precedence") {
  const auto file = parse_config_text("# comment\nalpha = 1.7\n\nbeta=1.2  # trailing\n--seed=9\n");
  CHECK(file.at("alpha") == "1.7");
  CHECK(file.at("beta") == "1.2");
  CHECK(file.at("seed") == "9");
  CHECK_THROWS_AS(parse_config_text("colour=blue\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("alpha 2\n"), ConfigError);

  const auto eff = merge_config(merge_config(default_config(), file), {{"alpha", "1.4"}, {"suite", "integrals"}});
  const auto c = parse_suite_config(eff);
  CHECK(c.alpha == 1.4);                                // flag beats file
  CHECK(c.beta == std::vector<double>{1.2, 1.2});       // file beats default, broadcast over groups
  CHECK(c.seed == 9);
  CHECK(c.k == std::vector<int>{1, 2});                 // default
  CHECK(parse_suite_config(with({{"suite", "all"}, {"samples", "1e6"}})).samples == 1000000);

  CHECK_THROWS_AS(parse_suite_config(default_config()), ConfigError);
  CHECK_THROWS_AS(parse_suite_config(with({{"suite", "nothing"}})), ConfigError);
  CHECK_THROWS_AS(parse_suite_config(with({{"suite", "integrals"}, {"samples", "1.5"}})), ConfigError);
  CHECK_THROWS_AS(parse_suite_config(with({{"suite", "integrals"}, {"n", "3"}})), ConfigError);
  CHECK_THROWS_AS(parse_suite_config(with({{"suite", "integrals"}, {"k", "2,1"}})), ConfigError);
  CHECK_THROWS_AS(parse_suite_config(with({{"suite", "integrals"}, {"mu", "1,2"}})), ConfigError);
  CHECK_THROWS_AS(parse_suite_config(with({{"suite", "integrals"}, {"precision", "quad"}})), ConfigError);
  CHECK_THROWS_AS(parse_suite_config(with({{"suite", "qseries"}, {"q", "1"}})), ConfigError);
}

TEST_CASE("integrals suite: Euler beta example") {
  const auto eff = with({{"suite", "integrals"}, {"n", "1"}, {"k", "1"}, {"alpha", "2"}, {"beta", "3"},
                         {"samples", "1e6"}, {"seed", "42"}});
  const auto r = run_suite(parse_suite_config(eff), eff);
  REQUIRE(r.cases.size() == 1);
  CHECK(r.cases[0].rhs == doctest::Approx(1.0 / 12).epsilon(1e-15));
  CHECK(r.cases[0].std_error.has_value());
  CHECK(r.all_pass());
  CHECK(r.meta.seed == 42);
  CHECK(r.config.at("alpha") == "2");
  // same config and seed reproduce the numbers exactly
  const auto again = run_suite(parse_suite_config(eff), eff);
  CHECK(again.cases[0].lhs == r.cases[0].lhs);
  CHECK(*again.cases[0].std_error == *r.cases[0].std_error);
}

TEST_CASE("violated hypotheses are a config error") {
  const auto eff = with({{"suite", "integrals"}, {"gamma", "0.7"}});
  CHECK_THROWS_AS(run_suite(parse_suite_config(eff), eff), ConfigError);
}

TEST_CASE("emit_report") {
  const auto eff = with({{"suite", "all"}, {"max-weight", "2"}, {"max-n", "1"}, {"samples", "2e4"}});
  const auto r = run_suite(parse_suite_config(eff), eff);
  CHECK(r.all_pass());
  CHECK(std::is_sorted(r.cases.begin(), r.cases.end(),
                       [](const ReportCase& a, const ReportCase& b) { return a.name < b.name; }));

  const auto json = emit_report(r, Format::json);
  CHECK(emit_report(parse_report_json(json), Format::json) == json);

  Report three = r;
  three.cases.resize(3);
  const auto csv = emit_report(three, Format::csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(csv.rfind("suite,name,params,lhs,rhs,abs_err,rel_err,stderr,pass", 0) == 0);

  Report one = r;
  one.cases.resize(1);
  const auto j = nlohmann::json::parse(emit_report(one, Format::json));
  CHECK(j.is_object());
  CHECK(j["cases"].size() == 1);
  CHECK(j["meta"].contains("generator_id"));

  const std::string path = "report_roundtrip_test.json";
  write_report(r, Format::json, path);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == json);
  std::remove(path.c_str());
  CHECK_THROWS(write_report(r, Format::json, "/nonexistent-dir/x.json"));
  CHECK_THROWS(parse_report_json("{\"suite\": 3}"));
}
