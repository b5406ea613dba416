#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "eiskern/error.hpp"
#include "eiskern/io/commands.hpp"
#include "eiskern/verify/suites.hpp"
#include "support.hpp"

using namespace eiskern;
using namespace eiskern::io;
using testsupport::cx;

TEST_CASE("complex number parsing") {
  const mp::Bits p = 128;
  CHECK(parse_complex("6", p) == cx(6.0, 0.0, p));
  CHECK(parse_complex("3.5+2i", p) == cx(3.5, 2.0, p));
  CHECK(parse_complex("3.5 - 2i", p) == cx(3.5, -2.0, p));
  CHECK(parse_complex("-0.25i", p) == cx(0.0, -0.25, p));
  CHECK(parse_complex("i", p) == cx(0.0, 1.0, p));
  CHECK(parse_complex("-i", p) == cx(0.0, -1.0, p));
  CHECK(parse_complex("1e-3+1e+2i", p) == mp::Complex(mp::Real::parse("1e-3", p), mp::Real::parse("1e2", p)));
  CHECK(parse_complex("(1.5,-2)", p) == cx(1.5, -2.0, p));
  CHECK(parse_complex("0.1", p).re() == mp::Real::parse("0.1", p));
  for (const char* bad : {"", "x", "3+x", "1+2j", "(1,2", "1..2", "++i"}) CHECK_THROWS_AS(parse_complex(bad, p), UsageError);
}

TEST_CASE("profile JSON") {
  auto p = profile_from_json(Json::parse(R"({"schema":"eiskern/1","P":128,"N_q":16})"), PrecisionProfile{});
  CHECK(p.P == 128);
  CHECK(p.N_q == 16);
  CHECK(p.tol_bits == 64);
  CHECK(p.M_tail == tail_for_bits(128 + 16));
  CHECK(to_json(p)["H_group"] == 200);
  CHECK(profile_from_json(to_json(p), PrecisionProfile{}) == p);
  CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"schema":"eiskern/2"})")), SchemaMismatch);
  CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"Q":1})")), SchemaMismatch);
  CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"P":"high"})")), BadData);
  CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"P":32})")), InsufficientPrecision);
  CHECK_THROWS_AS(profile_from_json(Json::parse("[1]")), BadData);

  std::string path = "/tmp/eiskern_test_profile.json";
  {
    std::ofstream(path) << R"({"name":"fast","P":96})";
  }
  CHECK(load_profile_file(path).P == 96);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_profile_file(path), BadData);
}

TEST_CASE("reports embed the configuration and render deterministically") {
  RunConfig cfg;
  cfg.command = "qexp";
  cfg.parameters = {{"delta", "true"}, {"N", "4"}};
  for (Format f : {Format::Json, Format::Csv, Format::Md}) {
    cfg.format = f;
    Report a = run_command(cfg), b = run_command(cfg);
    std::string ra = render(a);
    CHECK(ra == render(b));
    CHECK(ra.find("eiskern/1") != std::string::npos);
    bool has_profile = ra.find("\"N_q\":64") != std::string::npos || ra.find("\"N_q\": 64") != std::string::npos;
    CHECK(has_profile);
  }
  cfg.format = Format::Json;
  Json j = Json::parse(render(run_command(cfg)));
  CHECK(j["schema"] == "eiskern/1");
  CHECK(j["config"]["parameters"]["N"] == "4");
  CHECK(j["config"]["seed"] == 20240611UL);
  CHECK(j["result"]["coefficients"] == Json::array({"0", "1", "-24", "252", "-1472"}));
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
}

TEST_CASE("CSV and Markdown cells are escaped") {
  Report r;
  r.config.command = "x";
  r.columns = {"a", "b"};
  r.rows = {{"1,2", "say \"hi\""}, {"p|q", "plain"}};
  r.config.format = Format::Csv;
  CHECK(render(r).find("\"1,2\",\"say \"\"hi\"\"\"") != std::string::npos);
  r.config.format = Format::Md;
  CHECK(render(r).find("p\\|q") != std::string::npos);
}

TEST_CASE("command parameter validation") {
  RunConfig cfg;
  cfg.command = "lvalue";
  cfg.parameters = {{"weight", "twelve"}, {"s", "6"}};
  CHECK_THROWS_AS(run_command(cfg), UsageError);
  cfg.parameters = {{"weight", "14"}, {"s", "6"}};
  CHECK_THROWS_AS(run_command(cfg), OutOfDomain);
  cfg.parameters = {{"weight", "12"}, {"s", "6"}, {"twist", "2/5"}};
  Report r = run_command(cfg);
  CHECK(r.result["twist"] == "2/5");
  cfg.command = "qexp";
  cfg.parameters = {{"ek", "4"}, {"delta", "true"}};
  CHECK_THROWS_AS(run_command(cfg), UsageError);
  cfg.command = "nope";
  CHECK_THROWS_AS(run_command(cfg), UsageError);
}

TEST_CASE("unattainable classification") {
  verify::Criterion c;
  c.id = 5;
  c.items = {{"convolution (3,2) residual <= bound", true, 1e-16, 1e-8, ""},
             {"convolution (3,2) bound <= 1e-25", false, 1e-8, 1e-25, ""}};
  c.pass = false;
  CHECK(verify::known_unattainable(c));
  c.items.push_back({"Hecke action (5,2), A = 30, residual <= bound", false, 1.0, 1e-7, ""});
  CHECK_FALSE(verify::known_unattainable(c));
  c.items.pop_back();
  c.items[0].pass = false;
  CHECK_FALSE(verify::known_unattainable(c));
  c.items[0].pass = true;
  c.id = 4;
  CHECK_FALSE(verify::known_unattainable(c));
  CHECK(verify::parse_suite("periods") == verify::Suite::Periods);
  CHECK(verify::to_string(verify::Suite::Nonhol) == "nonhol");
  CHECK_THROWS_AS(verify::parse_suite("bogus"), OutOfDomain);
}

TEST_CASE("verify suite reports criteria in order") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.parameters = {{"suite", "brackets"}};
  Report r = run_command(cfg);
  CHECK(r.status == 0);
  REQUIRE(r.result["criteria"].size() == 2);
  CHECK(r.result["criteria"][0]["id"] == 1);
  CHECK(r.result["criteria"][1]["id"] == 2);
  CHECK(render(r) == render(run_command(cfg)));
}
