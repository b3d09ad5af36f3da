#include <doctest.h>

#include "hpd/report.hpp"

using namespace hpd;

namespace {

Scenario builtin(const std::string& name) {
  return parse_scenario(builtin_scenario_text(name), name);
}

const CheckResult* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("flat builtin passes every check including the frozen expectations") {
  Report r = run_scenario(builtin("flat"));
  CHECK(r.ok);
  CHECK(r.error.empty());
  CHECK(r.scenario == "flat");
  CHECK(r.n == 2);
  CHECK(r.order == 6);
  // 10 identity checks plus expect_beta, expect_phi, expect_termination
  CHECK(r.checks.size() == 13);
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
    CHECK(!c.first_failing_order.has_value());
  }
  // canonical check order, then the expectation checks
  for (std::size_t i = 0; i < all_check_names().size(); ++i)
    CHECK(r.checks[i].name == all_check_names()[i]);
  CHECK(r.checks[10].name == "expect_beta");
  CHECK(r.checks[11].name == "expect_phi");
  CHECK(r.checks[12].name == "expect_termination");
}

TEST_CASE("default echo renders the first two stages") {
  Report r = run_scenario(builtin("flat"));
  REQUIRE(r.echo.size() == 4);
  CHECK(r.echo[0].first == "beta[1]");
  CHECK(r.echo[0].second == "(z1)*dzb1 + (z2)*dzb2");
  CHECK(r.echo[1].first == "phi[1]");
  CHECK(r.echo[2].first == "beta[2]");
  CHECK(r.echo[2].second == "(1/2*w2)*dzb1 + (-1/2*w1)*dzb2");
  CHECK(r.echo[3].first == "phi[2]");
  CHECK(r.echo[3].second == "0");
  // echo can be suppressed entirely
  CHECK(run_scenario(builtin("flat"), 0).echo.empty());
}

TEST_CASE("dimension-3 builtin passes its seven applicable checks") {
  Report r = run_scenario(builtin("dim3"));
  CHECK(r.ok);
  CHECK(find_check(r, "rank_locus") == nullptr);
  CHECK(find_check(r, "modular_invariance") == nullptr);
  CHECK(find_check(r, "period_first_order") == nullptr);
  CHECK(find_check(r, "ks_identity") != nullptr);
  CHECK(find_check(r, "expect_termination") != nullptr);
}

TEST_CASE("structured output is deterministic byte for byte") {
  Scenario sc = builtin("flat");
  Report a = run_scenario(sc);
  Report b = run_scenario(sc);
  CHECK(report_json(a) == report_json(b));  // timing excluded by design
  CHECK(reports_json({a, b}).find("elapsed") == std::string::npos);
  // text rendering is stable apart from the optional timing suffix
  CHECK(report_text(a, false) == report_text(b, false));
  CHECK(report_text(a, false).find("[PASS] mc_residual") != std::string::npos);
  CHECK(report_text(a, false).find("result: PASS (13/13 checks)") != std::string::npos);
}

TEST_CASE("a sign mutation in the potential is caught and localized") {
  Scenario sc = builtin("cubic");
  sc.h = parse_poly(2, "z1*w2 - z2*w1");  // flipped second term
  Report r = run_scenario(sc);
  CHECK(!r.ok);
  bool named = false;
  for (const auto& c : r.checks)
    if (!c.pass && c.first_failing_order.has_value()) named = true;
  CHECK(named);
  const CheckResult* eb = find_check(r, "expect_beta");
  REQUIRE(eb != nullptr);
  CHECK(!eb->pass);
  CHECK(eb->first_failing_order == 1);
  CHECK(reports_exit_code({r}) == 1);
}

TEST_CASE("construction failures are reported as errors, not crashes") {
  Scenario sc = builtin("flat");
  SigmaMatrix bad(2);
  bad.set(0, 1, Poly::variable(2, 0, true));  // antiholomorphic entry
  sc.sigma = bad;
  Report r = run_scenario(sc);
  CHECK(!r.ok);
  CHECK(!r.error.empty());
  CHECK(r.checks.empty());
  CHECK(reports_exit_code({r}) == 2);
  CHECK(report_text(r).find("result: ERROR") != std::string::npos);
  CHECK(report_json(r).find("\"error\"") != std::string::npos);
}

TEST_CASE("exit codes rank errors above failures above passes") {
  Report pass = run_scenario(builtin("flat"));
  Scenario mut = builtin("flat");
  mut.h = parse_poly(2, "z1*w1 - z2*w2");
  Report fail = run_scenario(mut);
  Scenario broken = builtin("flat");
  SigmaMatrix bad(2);
  bad.set(0, 1, Poly::variable(2, 1, true));
  broken.sigma = bad;
  Report err = run_scenario(broken);
  CHECK(reports_exit_code({pass}) == 0);
  CHECK(reports_exit_code({pass, fail}) == 1);
  CHECK(reports_exit_code({pass, fail, err}) == 2);
  CHECK(reports_exit_code({}) == 0);
}

TEST_CASE("subset runs execute only the requested checks") {
  Scenario sc = builtin("cubic");
  sc.checks = {"mc_residual", "rank_locus"};
  sc.expect = Expectation{};
  Report r = run_scenario(sc);
  CHECK(r.ok);
  CHECK(r.checks.size() == 2);
  CHECK(r.checks[0].name == "mc_residual");
  CHECK(r.checks[1].name == "rank_locus");
}

TEST_CASE("rendering helpers write forms on the coordinate basis") {
  MixedForm f(2, 0);
  f.add(IdxList{}, IdxList{0}, TSeries::from_poly(parse_poly(2, "1/2*w2"), 0));
  f.add(IdxList{}, IdxList{1}, TSeries::from_poly(parse_poly(2, "-1/2*w1"), 0));
  CHECK(form_str(f) == "(1/2*w2)*dzb1 + (-1/2*w1)*dzb2");
  CHECK(form_str(MixedForm(2, 0)) == "0");
  TangentForm t(2, 0);
  t.add(1, IdxList{0}, TSeries::one(2, 0));
  CHECK(tangent_str(t) == "(1)*d/dz2@dzb1");
  CHECK(tangent_str(TangentForm(2, 0)) == "0");
}
