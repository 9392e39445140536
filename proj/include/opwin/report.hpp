#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace opwin {

struct CheckResult {
  std::string name;
  bool pass = true;
  double residual = 0.0;  // worst residual or ratio over the suite's trials
  std::string witness;    // parameters reproducing the worst instance
};

struct SuiteReport {
  std::string suite;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::map<std::string, double> constants;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  // Records the worst residual per check name; pass iff residual <= tol.
  void record(const std::string& name, double residual, double tol,
              const std::string& witness) {
    for (auto& c : checks) {
      if (c.name != name) continue;
      if (residual > c.residual) {
        c.residual = residual;
        c.witness = witness;
        c.pass = residual <= tol;
      }
      return;
    }
    checks.push_back(CheckResult{name, residual <= tol, residual, witness});
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["n"] = n;
    j["trials"] = trials;
    j["seed"] = seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json cj;
      cj["name"] = c.name;
      cj["status"] = c.pass ? "pass" : "fail";
      cj["residual"] = c.residual;
      cj["witness"] = c.witness;
      j["checks"].push_back(cj);
    }
    j["constants"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : constants) j["constants"][k] = v;
    return j;
  }

  std::string to_json_string() const { return to_json().dump(2) + "\n"; }

  // One row per check.
  std::string to_csv() const {
    std::ostringstream os;
    os << "suite,n,trials,seed,check,status,residual,witness\n";
    for (const auto& c : checks) {
      os << suite << ',' << n << ',' << trials << ',' << seed << ',' << c.name << ','
         << (c.pass ? "pass" : "fail") << ','
         << nlohmann::ordered_json(c.residual).dump() << ",\"" << c.witness << "\"\n";
    }
    return os.str();
  }
};

}  // namespace opwin
