#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hpd/scenario.hpp"

using namespace hpd;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool same_scenario(const Scenario& a, const Scenario& b) {
  if (a.name != b.name || a.n != b.n || a.order != b.order) return false;
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = i + 1; j < a.n; ++j)
      if (a.sigma.at(i, j) != b.sigma.at(i, j)) return false;
  if (a.h != b.h) return false;
  if (a.checks != b.checks) return false;
  if (a.expect.beta != b.expect.beta) return false;
  if (a.expect.phi != b.expect.phi) return false;
  if (a.expect.phi_zero_from != b.expect.phi_zero_from) return false;
  return true;
}

Scenario parse(const std::string& text) { return parse_scenario(text, "test"); }

}  // namespace

TEST_CASE("builtin scenarios are the bundled fixture files, byte for byte") {
  CHECK(builtin_names() == std::vector<std::string>{"flat", "cubic", "dim3"});
  for (const std::string& name : builtin_names()) {
    const std::string path = std::string(HPD_FIXTURE_DIR) + "/" + name + ".json";
    CHECK(builtin_scenario_text(name) == slurp(path));
  }
  CHECK_THROWS_AS(builtin_scenario_text("nope"), Error);
}

TEST_CASE("flat fixture parses to the documented scenario") {
  Scenario sc = parse_scenario(builtin_scenario_text("flat"), "fallback");
  CHECK(sc.name == "flat");
  CHECK(sc.n == 2);
  CHECK(sc.order == 6);
  CHECK(sc.sigma.at(0, 1) == Poly::constant(2, GaussianRational(1)));
  CHECK(sc.h == parse_poly(2, "z1*w1 + z2*w2"));
  CHECK(sc.checks == all_check_names());
  CHECK(sc.expect.phi_zero_from == 2);
  REQUIRE(sc.expect.beta.count(2) == 1);
  CHECK(sc.expect.beta.at(2).at(0) == parse_poly(2, "1/2*w2"));
  CHECK(sc.expect.beta.at(2).at(1) == parse_poly(2, "-1/2*w1"));
  REQUIRE(sc.expect.phi.count(1) == 1);
  CHECK(sc.expect.phi.at(1).at({1, 0}) == Poly::constant(2, GaussianRational(1)));
  // an explicitly frozen empty order pins "no third stage"
  REQUIRE(sc.expect.beta.count(3) == 1);
  CHECK(sc.expect.beta.at(3).empty());
}

TEST_CASE("dimension-3 fixture restricts the checks to the applicable ones") {
  Scenario sc = parse_scenario(builtin_scenario_text("dim3"), "fallback");
  CHECK(sc.n == 3);
  CHECK(sc.order == 4);
  CHECK(sc.sigma.at(0, 1) == Poly::variable(3, 2));
  CHECK(sc.sigma.at(0, 2).is_zero());
  CHECK(sc.checks.size() == 7);
  for (const std::string& c : sc.checks) CHECK(!check_requires_dim2(c));
}

TEST_CASE("canonical printing round-trips every builtin") {
  for (const std::string& name : builtin_names()) {
    Scenario sc = parse_scenario(builtin_scenario_text(name), name);
    Scenario re = parse_scenario(print_scenario(sc), "unused");
    CHECK(same_scenario(sc, re));
    // printing is idempotent once canonical
    CHECK(print_scenario(re) == print_scenario(sc));
  }
}

TEST_CASE("omega input is normalized to its generating potential") {
  const char* text = R"({
    "dimension": 2,
    "sigma": [["z1"]],
    "omega": [["0", "2"], ["-1", "0"]],
    "checks": ["mc_residual", "rank_locus"]
  })";
  Scenario sc = parse(text);
  CHECK(sc.h == parse_poly(2, "2*z1*w2 - z2*w1"));
  CHECK(sc.order == 4);  // default
  CHECK(sc.name == "test");
  CHECK(sc.checks == std::vector<std::string>{"mc_residual", "rank_locus"});
  Scenario re = parse(print_scenario(sc));
  CHECK(same_scenario(sc, re));
}

TEST_CASE("requested checks are resolved into canonical order") {
  CHECK(resolve_checks(2, {}) == all_check_names());
  CHECK(resolve_checks(3, {}).size() == 7);
  CHECK(resolve_checks(2, {"rank_locus", "mc_residual"}) ==
        std::vector<std::string>{"mc_residual", "rank_locus"});
  CHECK_THROWS_WITH_AS(resolve_checks(2, {"bogus"}), doctest::Contains("unknown check"),
                       Error);
  CHECK_THROWS_WITH_AS(resolve_checks(3, {"rank_locus"}),
                       doctest::Contains("requires dimension 2"), Error);
  CHECK(check_requires_dim2("modular_invariance"));
  CHECK(!check_requires_dim2("mc_residual"));
}

TEST_CASE("parser rejects malformed scenarios with specific messages") {
  auto bad = [](const std::string& text, const std::string& needle) {
    try {
      parse_scenario(text, "bad");
      FAIL("expected a parse failure for: " << text);
    } catch (const Error& e) {
      CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                    "message '" << e.what() << "' lacks '" << needle << "'");
    }
  };
  bad("{", "invalid JSON");
  bad("[]", "top level");
  bad(R"({"sigma": [["1"]], "potential_h": "0"})", "missing 'dimension'");
  bad(R"({"dimension": 0, "sigma": [], "potential_h": "0"})", "'dimension' must be between");
  bad(R"({"dimension": 9, "sigma": [], "potential_h": "0"})", "'dimension' must be between");
  bad(R"({"dimension": 2, "potential_h": "0"})", "missing 'sigma'");
  bad(R"({"dimension": 2, "order": 0, "sigma": [["1"]], "potential_h": "0"})",
      "'order' must be a positive integer");
  bad(R"({"dimension": 2, "order": 25, "sigma": [["1"]], "potential_h": "0"})",
      "larger than 24");
  bad(R"({"dimension": 2, "sigma": [["1"], ["2"]], "potential_h": "0"})",
      "row 1 must have 2 entries");
  bad(R"({"dimension": 2, "sigma": [["1", "1"], ["1", "0"]], "potential_h": "0"})",
      "not antisymmetric");
  bad(R"({"dimension": 2, "sigma": [["w1"]], "potential_h": "0"})", "holomorphic");
  bad(R"({"dimension": 2, "sigma": [["z3"]], "potential_h": "0"})", "sigma entry (1,2)");
  bad(R"({"dimension": 2, "sigma": [["1"]]})", "exactly one of");
  bad(R"({"dimension": 2, "sigma": [["1"]], "potential_h": "0", "omega": [["0","0"],["0","0"]]})",
      "exactly one of");
  bad(R"({"dimension": 2, "sigma": [["1"]], "omega": [["z1", "0"], ["0", "0"]]})",
      "must be constant");
  bad(R"({"dimension": 2, "sigma": [["1"]], "potential_h": "0", "extra": 1})",
      "unknown key 'extra'");
  bad(R"({"dimension": 2, "sigma": [["1"]], "potential_h": "0", "checks": ["nope"]})",
      "unknown check");
  bad(R"({"dimension": 3, "sigma": [["0","0"],["0"]], "potential_h": "0", "checks": ["period_first_order"]})",
      "requires dimension 2");
  bad(R"({"dimension": 2, "sigma": [["1"]], "potential_h": "0", "checks": []})",
      "must not be an empty list");
  bad(R"({"dimension": 2, "sigma": [["1"]], "potential_h": "0",
          "expect": {"beta": {"0": {}}}})",
      "must be a positive integer");
  bad(R"({"dimension": 2, "sigma": [["1"]], "potential_h": "0",
          "expect": {"beta": {"1": {"3": "0"}}}})",
      "out of range");
  bad(R"({"dimension": 2, "sigma": [["1"]], "potential_h": "0",
          "expect": {"phi": {"1": {"badkey": "0"}}}})",
      "must look like 'j|i'");
  bad(R"({"dimension": 2, "sigma": [["1"]], "potential_h": "0",
          "expect": {"mystery": 3}})",
      "unknown key 'mystery'");
  // integrability is validated at parse time, naming the failing triple
  bad(R"({"dimension": 3, "sigma": [["z2", "0"], ["z1"]], "potential_h": "0"})",
      "not integrable");
}

TEST_CASE("scenario file loader reports the path on failure") {
  CHECK_THROWS_WITH_AS(load_scenario_file("/nonexistent/x.json"),
                       doctest::Contains("cannot open"), Error);
}

TEST_CASE("printing uses upper-triangle sigma rows and 1-based expect keys") {
  Scenario sc = parse_scenario(builtin_scenario_text("cubic"), "cubic");
  const std::string printed = print_scenario(sc);
  CHECK(printed.find("\"potential_h\": \"z1*w2 + z2*w1\"") != std::string::npos);
  CHECK(printed.find("\"z2^3 + z1^3 + 1\"") != std::string::npos);
  CHECK(printed.find("\"1|1\"") != std::string::npos);
  CHECK(printed.find("\"order\": 5") != std::string::npos);
  CHECK(printed.back() == '\n');
}
