#include <doctest.h>

#include <json.hpp>

#include "report.hpp"

using namespace signumcalc;

TEST_CASE("json report schema") {
  VerifyConfig cfg;
  cfg.kmax = 2;
  cfg.trials = 3;
  auto reports = run_suites({"prop31", "cor34"}, cfg);
  auto j = nlohmann::json::parse(render_reports(reports, Format::Json));
  CHECK(j["schema"] == "1");
  CHECK(j["all_pass"] == true);
  REQUIRE(j["reports"].size() == 2);
  CHECK(j["reports"][0]["suite"] == "prop31");
  for (const auto& e : j["reports"][1]["entries"]) {
    CHECK(e["status"] == "pass");
    CHECK(e.contains("lhs"));
    CHECK(e.contains("rhs"));
    CHECK(e["dims"] == nlohmann::json::array({2, 3, 5}));
    CHECK(e["seed"] == 0);
    CHECK_FALSE(e.contains("detail"));
  }
}

TEST_CASE("failures carry detail") {
  SuiteReport r{"demo", {verify_identity("bad", dirac_basis(1), dirac_basis(1, 2), VerifyConfig{})}};
  auto j = nlohmann::json::parse(render_reports({r}, Format::Json));
  CHECK(j["all_pass"] == false);
  CHECK(j["reports"][0]["entries"][0]["status"] == "fail");
  CHECK(j["reports"][0]["entries"][0].contains("detail"));
  CHECK(render_reports({r}, Format::Text).find("FAIL demo/bad") != std::string::npos);
  CHECK(render_reports({r}, Format::Markdown).find("| bad | fail |") != std::string::npos);
}

TEST_CASE("prop35 table") {
  std::string md = render_prop35_table(1, 1, Format::Markdown);
  CHECK(md.rfind("| family | k | ℓ | coefficient | target basis |\n", 0) == 0);
  CHECK(md.find("| i | 1 | 1 | m*(m+1) | delta |") != std::string::npos);
  CHECK(md.find("| iv | 0 | 0 | -m | delta |") != std::string::npos);
  auto j = nlohmann::json::parse(render_prop35_table(4, 4, Format::Json));
  CHECK(j["schema"] == "1");
  CHECK(j["rows"].size() == 4 * 15);
  CHECK_THROWS_AS(render_prop35_table(1, 1, Format::Text), Error);
  CHECK(format_from_name("md") == Format::Markdown);
  CHECK_FALSE(format_from_name("xml").has_value());
}
