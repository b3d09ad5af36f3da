#include "hpd/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hpd {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kCheckNames = {
    "mc_residual",        "beta_closure", "frame_duality", "holomorphicity",
    "schouten_a",         "omega_a",      "ks_identity",   "period_first_order",
    "rank_locus",         "modular_invariance"};

const std::vector<std::string> kDim2Only = {"period_first_order", "rank_locus",
                                            "modular_invariance"};

[[noreturn]] void fail(const std::string& msg) { throw Error("scenario: " + msg); }

std::size_t to_index(const std::string& key, std::size_t n, const std::string& what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &pos);
  } catch (const std::exception&) {
    fail(what + " index '" + key + "' is not a number");
  }
  if (pos != key.size()) fail(what + " index '" + key + "' is not a number");
  if (v < 1 || v > n) fail(what + " index '" + key + "' out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(v - 1);
}

std::size_t to_order_key(const std::string& key, const std::string& what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &pos);
  } catch (const std::exception&) {
    fail(what + " order '" + key + "' is not a number");
  }
  if (pos != key.size() || v < 1) fail(what + " order '" + key + "' must be a positive integer");
  return static_cast<std::size_t>(v);
}

Poly parse_entry(std::size_t n, const Json& v, const std::string& what) {
  if (v.is_number_integer())
    return Poly::constant(n, GaussianRational(v.get<long>()));
  if (!v.is_string()) fail(what + " must be a polynomial string");
  try {
    return parse_poly(n, v.get<std::string>());
  } catch (const Error& e) {
    fail(what + ": " + e.what());
  }
}

void reject_unknown_keys(const Json& obj, const std::vector<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end())
      fail("unknown key '" + key + "' in " + where);
  }
}

SigmaMatrix parse_sigma(std::size_t n, const Json& j) {
  if (!j.is_array()) fail("'sigma' must be an array of rows");
  SigmaMatrix sigma(n);
  if (j.size() == n) {
    // Full matrix: verify antisymmetry, read the upper triangle.
    std::vector<std::vector<Poly>> full;
    for (std::size_t i = 0; i < n; ++i) {
      if (!j[i].is_array() || j[i].size() != n)
        fail("'sigma' row " + std::to_string(i + 1) + " must have " + std::to_string(n) +
             " entries");
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        row.push_back(parse_entry(n, j[i][k],
                                  "sigma entry (" + std::to_string(i + 1) + "," +
                                      std::to_string(k + 1) + ")"));
      full.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (full[i][k] != -full[k][i])
          fail("sigma matrix is not antisymmetric at entry (" + std::to_string(i + 1) + "," +
               std::to_string(k + 1) + ")");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k) sigma.set(i, k, full[i][k]);
    return sigma;
  }
  if (n >= 1 && j.size() == n - 1) {
    // Strict upper triangle: row i holds entries (i, i+1)..(i, n).
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!j[i].is_array() || j[i].size() != n - 1 - i)
        fail("'sigma' upper-triangle row " + std::to_string(i + 1) + " must have " +
             std::to_string(n - 1 - i) + " entries");
      for (std::size_t k = 0; k < j[i].size(); ++k)
        sigma.set(i, i + 1 + k,
                  parse_entry(n, j[i][k],
                              "sigma entry (" + std::to_string(i + 1) + "," +
                                  std::to_string(i + 2 + k) + ")"));
    }
    return sigma;
  }
  fail("'sigma' must have " + std::to_string(n) + " rows (full matrix) or " +
       std::to_string(n - 1) + " rows (upper triangle)");
}

Expectation parse_expect(std::size_t n, const Json& j) {
  if (!j.is_object()) fail("'expect' must be an object");
  reject_unknown_keys(j, {"beta", "phi", "phi_zero_from"}, "'expect'");
  Expectation e;
  if (j.contains("beta")) {
    if (!j["beta"].is_object()) fail("'expect.beta' must be an object keyed by order");
    for (const auto& [okey, comps] : j["beta"].items()) {
      const std::size_t k = to_order_key(okey, "expect.beta");
      if (!comps.is_object()) fail("'expect.beta." + okey + "' must be an object");
      std::map<std::size_t, Poly> parsed;
      for (const auto& [ikey, val] : comps.items())
        parsed.insert_or_assign(to_index(ikey, n, "expect.beta component"),
                                parse_entry(n, val, "expect.beta." + okey + "." + ikey));
      e.beta[k] = std::move(parsed);
    }
  }
  if (j.contains("phi")) {
    if (!j["phi"].is_object()) fail("'expect.phi' must be an object keyed by order");
    for (const auto& [okey, comps] : j["phi"].items()) {
      const std::size_t k = to_order_key(okey, "expect.phi");
      if (!comps.is_object()) fail("'expect.phi." + okey + "' must be an object");
      std::map<std::pair<std::size_t, std::size_t>, Poly> parsed;
      for (const auto& [ikey, val] : comps.items()) {
        const auto bar = ikey.find('|');
        if (bar == std::string::npos)
          fail("expect.phi component key '" + ikey + "' must look like 'j|i'");
        const std::size_t v = to_index(ikey.substr(0, bar), n, "expect.phi vector");
        const std::size_t i = to_index(ikey.substr(bar + 1), n, "expect.phi form");
        parsed.insert_or_assign(std::make_pair(v, i),
                                parse_entry(n, val, "expect.phi." + okey + "." + ikey));
      }
      e.phi[k] = std::move(parsed);
    }
  }
  if (j.contains("phi_zero_from")) {
    if (!j["phi_zero_from"].is_number_unsigned() || j["phi_zero_from"].get<std::size_t>() < 1)
      fail("'expect.phi_zero_from' must be a positive integer");
    e.phi_zero_from = j["phi_zero_from"].get<std::size_t>();
  }
  return e;
}

}  // namespace

const std::vector<std::string>& all_check_names() { return kCheckNames; }

bool check_requires_dim2(const std::string& name) {
  return std::find(kDim2Only.begin(), kDim2Only.end(), name) != kDim2Only.end();
}

std::vector<std::string> resolve_checks(std::size_t n, const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  if (requested.empty()) {
    for (const auto& c : kCheckNames)
      if (n == 2 || !check_requires_dim2(c)) out.push_back(c);
    return out;
  }
  for (const auto& r : requested) {
    if (std::find(kCheckNames.begin(), kCheckNames.end(), r) == kCheckNames.end())
      fail("unknown check '" + r + "'");
    if (check_requires_dim2(r) && n != 2)
      fail("check '" + r + "' requires dimension 2, scenario has dimension " + std::to_string(n));
  }
  for (const auto& c : kCheckNames)
    if (std::find(requested.begin(), requested.end(), c) != requested.end()) out.push_back(c);
  return out;
}

Scenario parse_scenario(const std::string& json_text, const std::string& fallback_name) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("top level must be a JSON object");
  reject_unknown_keys(
      j, {"name", "dimension", "order", "sigma", "potential_h", "omega", "checks", "expect"},
      "scenario");

  Scenario sc;
  sc.name = fallback_name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("'name' must be a string");
    sc.name = j["name"].get<std::string>();
  }

  if (!j.contains("dimension")) fail("missing 'dimension'");
  if (!j["dimension"].is_number_unsigned()) fail("'dimension' must be a positive integer");
  sc.n = j["dimension"].get<std::size_t>();
  if (sc.n < 1 || sc.n > 8) fail("'dimension' must be between 1 and 8");

  if (j.contains("order")) {
    if (!j["order"].is_number_unsigned() || j["order"].get<std::size_t>() < 1)
      fail("'order' must be a positive integer");
    sc.order = j["order"].get<std::size_t>();
    if (sc.order > 24) fail("'order' larger than 24 is not supported");
  }

  if (!j.contains("sigma")) fail("missing 'sigma'");
  sc.sigma = parse_sigma(sc.n, j["sigma"]);
  try {
    PoissonStructure guard(sc.n, sc.sigma);
    (void)guard;
  } catch (const Error& e) {
    fail(e.what());
  }

  const bool has_h = j.contains("potential_h");
  const bool has_omega = j.contains("omega");
  if (has_h == has_omega) fail("exactly one of 'potential_h' or 'omega' is required");
  if (has_h) {
    sc.h = parse_entry(sc.n, j["potential_h"], "'potential_h'");
  } else {
    const Json& om = j["omega"];
    if (!om.is_array() || om.size() != sc.n) fail("'omega' must be an n x n matrix");
    std::vector<std::vector<GaussianRational>> m;
    for (std::size_t a = 0; a < sc.n; ++a) {
      if (!om[a].is_array() || om[a].size() != sc.n) fail("'omega' must be an n x n matrix");
      std::vector<GaussianRational> row;
      for (std::size_t b = 0; b < sc.n; ++b) {
        const Poly p = parse_entry(sc.n, om[a][b],
                                   "omega entry (" + std::to_string(a + 1) + "," +
                                       std::to_string(b + 1) + ")");
        if (!p.is_constant())
          fail("omega entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
               ") must be constant");
        row.push_back(p.constant_value());
      }
      m.push_back(std::move(row));
    }
    sc.h = potential_from_constant_omega(sc.n, m);
  }

  std::vector<std::string> requested;
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) fail("'checks' must be an array of names");
    for (const auto& c : j["checks"]) {
      if (!c.is_string()) fail("'checks' entries must be strings");
      requested.push_back(c.get<std::string>());
    }
    if (requested.empty()) fail("'checks' must not be an empty list");
  }
  sc.checks = resolve_checks(sc.n, requested);

  if (j.contains("expect")) sc.expect = parse_expect(sc.n, j["expect"]);
  return sc;
}

std::string print_scenario(const Scenario& sc) {
  Json j;
  j["name"] = sc.name;
  j["dimension"] = sc.n;
  j["order"] = sc.order;
  Json rows = Json::array();
  for (std::size_t i = 0; i + 1 < sc.n; ++i) {
    Json row = Json::array();
    for (std::size_t k = i + 1; k < sc.n; ++k) row.push_back(sc.sigma.at(i, k).str());
    rows.push_back(std::move(row));
  }
  j["sigma"] = std::move(rows);
  j["potential_h"] = sc.h.str();
  Json checks = Json::array();
  for (const auto& c : sc.checks) checks.push_back(c);
  j["checks"] = std::move(checks);
  if (!sc.expect.empty()) {
    Json e = Json::object();
    if (!sc.expect.beta.empty()) {
      Json b = Json::object();
      for (const auto& [k, comps] : sc.expect.beta) {
        Json o = Json::object();
        for (const auto& [i, p] : comps) o[std::to_string(i + 1)] = p.str();
        b[std::to_string(k)] = std::move(o);
      }
      e["beta"] = std::move(b);
    }
    if (!sc.expect.phi.empty()) {
      Json f = Json::object();
      for (const auto& [k, comps] : sc.expect.phi) {
        Json o = Json::object();
        for (const auto& [vi, p] : comps)
          o[std::to_string(vi.first + 1) + "|" + std::to_string(vi.second + 1)] = p.str();
        f[std::to_string(k)] = std::move(o);
      }
      e["phi"] = std::move(f);
    }
    if (sc.expect.phi_zero_from) e["phi_zero_from"] = *sc.expect.phi_zero_from;
    j["expect"] = std::move(e);
  }
  return j.dump(2) + "\n";
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  if (const auto slash = stem.find_last_of('/'); slash != std::string::npos)
    stem = stem.substr(slash + 1);
  if (const auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  return parse_scenario(buf.str(), stem);
}

namespace {

const std::string kFlatScenario = R"json({
  "name": "flat",
  "dimension": 2,
  "order": 6,
  "sigma": [["1"]],
  "potential_h": "z1*w1 + z2*w2",
  "expect": {
    "beta": {
      "1": {"1": "z1", "2": "z2"},
      "2": {"1": "1/2*w2", "2": "-1/2*w1"},
      "3": {}
    },
    "phi": {
      "1": {"2|1": "1", "1|2": "-1"}
    },
    "phi_zero_from": 2
  }
}
)json";

const std::string kCubicScenario = R"json({
  "name": "cubic",
  "dimension": 2,
  "order": 5,
  "sigma": [["z1^3 + z2^3 + 1"]],
  "potential_h": "z1*w2 + z2*w1",
  "expect": {
    "beta": {
      "1": {"1": "z2", "2": "z1"},
      "2": {
        "1": "-1/2*z1^3*w2 - 1/2*z2^3*w2 - 1/2*w2",
        "2": "1/2*z1^3*w1 + 1/2*z2^3*w1 + 1/2*w1"
      }
    },
    "phi": {
      "1": {"1|1": "-z1^3 - z2^3 - 1", "2|2": "z1^3 + z2^3 + 1"}
    }
  }
}
)json";

const std::string kDim3Scenario = R"json({
  "name": "dim3",
  "dimension": 3,
  "order": 4,
  "sigma": [["z3", "0"], ["0"]],
  "potential_h": "z1*w1 + z2*w2 + z3*w3",
  "expect": {
    "beta": {
      "1": {"1": "z1", "2": "z2", "3": "z3"},
      "2": {"1": "1/2*z3*w2", "2": "-1/2*z3*w1"},
      "3": {}
    },
    "phi": {
      "1": {"2|1": "z3", "1|2": "-z3"}
    },
    "phi_zero_from": 2
  }
}
)json";

}  // namespace

std::vector<std::string> builtin_names() { return {"flat", "cubic", "dim3"}; }

const std::string& builtin_scenario_text(const std::string& name) {
  if (name == "flat") return kFlatScenario;
  if (name == "cubic") return kCubicScenario;
  if (name == "dim3") return kDim3Scenario;
  throw Error("unknown builtin scenario '" + name + "' (have: flat, cubic, dim3)");
}

}  // namespace hpd
