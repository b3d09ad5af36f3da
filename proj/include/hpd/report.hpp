#pragma once

#include <optional>

#include "hpd/deformed.hpp"
#include "hpd/scenario.hpp"

namespace hpd {

// Outcome of a single named identity check.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // one-line explanation or failure description
  std::optional<std::size_t> first_failing_order;  // t-order, when meaningful
  std::size_t residual_terms = 0;
  std::uint32_t residual_degree = 0;
};

// Full verification record for one scenario run.
struct Report {
  std::string scenario;
  std::size_t n = 0;
  std::size_t order = 0;
  bool ok = false;     // every check passed and no construction error
  std::string error;   // nonempty when the run aborted before the checks
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::string>> echo;  // label -> rendered value
  double elapsed_seconds = 0.0;
};

// Builds the deformation, the frame and every requested check.  The
// low-order pieces β_k, φ_k with k <= echo_order are rendered into the
// echo block.  Construction failures (non-integrable sigma, malformed
// input) land in Report::error instead of throwing.
Report run_scenario(const Scenario& sc, std::size_t echo_order = 2);

// Human-oriented rendering; timing is optional so output can be diffed.
std::string report_text(const Report& r, bool with_timing = true);
// Machine-oriented rendering: deterministic, byte-stable across runs
// (timing excluded by design).
std::string report_json(const Report& r);
std::string reports_json(const std::vector<Report>& rs);

// 0: all scenarios pass; 1: at least one check failed; 2: at least one
// run aborted with an error.
int reports_exit_code(const std::vector<Report>& rs);

// Rendering helpers (also used by tests): polynomial-coefficient forms
// written on the dz/dzb basis, e.g. "(1/2*w2)*dzb1 + (-1/2*w1)*dzb2".
std::string form_str(const MixedForm& f);
std::string tangent_str(const TangentForm& f);

}  // namespace hpd
