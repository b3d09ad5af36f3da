#pragma once

#include <map>
#include <optional>
#include <string>

#include "hpd/mc.hpp"

namespace hpd {

// Frozen values a scenario pins down, compared exactly against the
// recursion output.  Orders are 1-based t-exponents; form indices are
// stored 0-based.
struct Expectation {
  // order k -> (dz̄ index -> coefficient) for β_k.
  std::map<std::size_t, std::map<std::size_t, Poly>> beta;
  // order k -> ((vector leg, dz̄ index) -> coefficient) for φ_k.
  std::map<std::size_t, std::map<std::pair<std::size_t, std::size_t>, Poly>> phi;
  // All φ_m with m >= this order vanish (finite-termination pin).
  std::optional<std::size_t> phi_zero_from;

  bool empty() const { return beta.empty() && phi.empty() && !phi_zero_from; }
};

// One verification problem: a bivector candidate, a potential, a
// truncation order and the list of identity checks to run.
struct Scenario {
  std::string name;
  std::size_t n = 2;
  std::size_t order = 4;
  SigmaMatrix sigma{2};
  Poly h{2};
  std::vector<std::string> checks;  // resolved, in canonical order
  Expectation expect;
};

// Canonical check names, in report order.  The last three require
// dimension 2.
const std::vector<std::string>& all_check_names();
bool check_requires_dim2(const std::string& name);
// Resolves a requested list (empty = all applicable) against the
// dimension; throws on unknown names or dimension conflicts.
std::vector<std::string> resolve_checks(std::size_t n, const std::vector<std::string>& requested);

// Parses the JSON scenario format:
//   {
//     "name": "flat",                      // optional
//     "dimension": 2,
//     "order": 6,                          // optional, default 4
//     "sigma": [["1"]],                    // upper-triangle rows, or full matrix
//     "potential_h": "z1*w1 + z2*w2",      // or "omega": [[...], [...]]
//     "checks": ["mc_residual"],           // optional, default: all applicable
//     "expect": {                          // optional
//       "beta": {"2": {"1": "1/2*w2", "2": "-1/2*w1"}},
//       "phi":  {"1": {"2|1": "1", "1|2": "-1"}},
//       "phi_zero_from": 2
//     }
//   }
// Polynomial entries use the expression grammar of parse_poly.  The
// sigma matrix may be given as the strict upper triangle (row i
// holding entries (i,i+1)..(i,n)) or as a full matrix, which must be
// antisymmetric.  Throws Error with a descriptive message on any
// malformed input.
Scenario parse_scenario(const std::string& json_text, const std::string& fallback_name);
Scenario load_scenario_file(const std::string& path);

// Canonical JSON form of a scenario; parse_scenario(print_scenario(sc))
// reproduces sc field for field (omega inputs are normalized to their
// generating potential).
std::string print_scenario(const Scenario& sc);

// Built-in example scenarios (embedded copies of the fixture files).
std::vector<std::string> builtin_names();
const std::string& builtin_scenario_text(const std::string& name);

}  // namespace hpd
