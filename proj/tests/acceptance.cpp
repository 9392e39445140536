// Acceptance gate: one line per criterion, exit code = number of failures.
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "opwin/verify.hpp"

using namespace opwin;

namespace {

const std::vector<std::size_t> kSizes = {4, 6, 8, 12, 16};
const std::vector<std::size_t> kSmallSizes = {4, 6, 8, 12};

struct Gate {
  int failures = 0;

  void report(int idx, bool pass, const std::string& what, const std::string& detail = "") {
    std::cout << "criterion " << idx << ": " << (pass ? "PASS" : "FAIL") << " - " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
  }

  // Runs `suite` across sizes; pass iff every check of every run passes.
  bool suite_over(const std::string& suite, const std::vector<std::size_t>& sizes,
                  std::size_t trials, std::uint64_t seed, std::string* detail) {
    bool ok = true;
    double worst = 0.0;
    std::string where;
    for (std::size_t n : sizes) {
      const SuiteReport rep = run_suite(suite, n, trials, seed);
      for (const auto& c : rep.checks) {
        if (c.residual > worst) {
          worst = c.residual;
          where = c.name + " N=" + std::to_string(n);
        }
        if (!c.pass) {
          ok = false;
          *detail = "failed " + c.name + " at N=" + std::to_string(n) +
                    " residual=" + std::to_string(c.residual) + " " + c.witness;
          return false;
        }
      }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "worst residual %.3g at %s", worst, where.c_str());
    *detail = buf;
    return ok;
  }
};

}  // namespace

int main() {
  Gate gate;
  std::string d;

  gate.report(1, gate.suite_over("moyal", kSizes, 100, 42, &d), "Moyal identity", d);
  gate.report(2, gate.suite_over("isometry", kSizes, 50, 42, &d),
              "operator-window transform isometry", d);
  gate.report(3, gate.suite_over("reconstruction", kSizes, 50, 42, &d),
              "reconstruction identity", d);
  gate.report(4, gate.suite_over("trace-lemma", kSizes, 50, 42, &d), "trace lemma", d);
  gate.report(5, gate.suite_over("sandwich", kSizes, 200, 42, &d),
              "two-sided modulation-norm bounds over the (p,q,m) grid", d);
  gate.report(6, gate.suite_over("schatten-embed", kSizes, 50, 42, &d),
              "Schatten embeddings and B_2 = S_2", d);
  gate.report(7, gate.suite_over("cohen", kSizes, 20, 42, &d),
              "Cohen distribution identities and sandwich", d);
  gate.report(8, gate.suite_over("localization", kSmallSizes, 20, 42, &d),
              "localization square-root pipeline", d);

  // 9: implicit-constant regressions
  {
    bool ok = true;
    std::string detail;
    const double dom = estimate_constant("dominance", 8, 50, 42);
    if (!(dom <= 1.0 + 1e-9)) {
      ok = false;
      detail = "dominance constant " + std::to_string(dom);
    }
    const double hi = estimate_constant("amalgam-max", 8, 20, 42);
    const double lo = estimate_constant("amalgam-min", 8, 20, 42);
    const double b1 = estimate_constant("localization-b1", 8, 8, 42);
    const double b2 = estimate_constant("localization-b2", 8, 8, 42);
    for (double c : {hi, lo, b1, b2})
      if (!(std::isfinite(c) && c > 0.0)) {
        ok = false;
        detail = "non-finite or non-positive recorded constant";
      }
    // bit-identical reproduction under a fixed seed
    if (estimate_constant("amalgam-max", 8, 20, 42) != hi ||
        estimate_constant("localization-b1", 8, 8, 42) != b1) {
      ok = false;
      detail = "constants not reproducible";
    }
    if (ok) {
      char buf[200];
      std::snprintf(buf, sizeof buf,
                    "dominance %.12f, amalgam ratio [%.4g, %.4g], B_p ratios %.4g / %.4g",
                    dom, lo, hi, b1, b2);
      detail = buf;
    }
    gate.report(9, ok, "implicit-constant regressions", detail);
  }

  gate.report(10, gate.suite_over("khinchin", kSizes, 50, 42, &d),
              "Khinchin exact expectations", d);

  // 11: determinism - byte-identical reports
  {
    bool ok = true;
    std::string detail = "all 15 suites byte-identical at N=6";
    for (const auto& name : registered_suites()) {
      const SuiteReport a = run_suite(name, 6, 5, 123);
      const SuiteReport b = run_suite(name, 6, 5, 123);
      if (a.to_json_string() != b.to_json_string()) {
        ok = false;
        detail = "suite " + name + " not deterministic";
        break;
      }
    }
    gate.report(11, ok, "deterministic reports", detail);
  }

  return gate.failures;
}
