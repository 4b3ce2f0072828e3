// Acceptance suite: runs every verification criterion at its stated
// bound and prints one pass/fail line per criterion. All checks are
// exact; the process exits nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "unival/checks.hpp"

using namespace unival;

namespace {

struct Criterion {
  const char* label;
  const char* check_name;
  int n_max; // 0: not parameterized by n
};

// stated bounds per criterion
const Criterion kCriteria[] = {
    {"01 polynomial identities (k, n <= 12)", "poly-identities", 0},
    {"02 binomial identity (n <= 20)", "binomial-identity", 0},
    {"03 Fu quotient and graded dimensions (n <= 5)", "fu-quotient", 5},
    {"04 ball evaluation and u p_n = 0 (n <= 5)", "ball-evaluation", 5},
    {"05 module well-definedness (n <= 5)", "module-well-defined", 5},
    {"06 kernel lemma (n <= 5)", "kernel-lemma", 5},
    {"07 presentation theorem (n <= 4)", "presentation", 4},
    {"08 dimension corollary and total count (n <= 6)", "dimensions", 6},
    {"09 decomposition by b and g (n <= 5)", "decomposition", 5},
    {"10 oracle equivalence (n <= 5)", "oracle-equivalence", 5},
    {"11 centroid kernel and classical measures (n <= 5)", "centroid-kernel", 5},
    {"12 angularity theorem (n <= 5, degrees <= 4)", "angularity", 5},
    {"13 magic lemma with derived constants (n <= 5)", "magic-lemma", 5},
    {"14 homomorphism properties (n <= 4)", "homomorphisms", 4},
};

const CheckDef* find_check(const std::string& name) {
  for (const auto& def : verification_checks())
    if (def.name == name) return &def;
  return nullptr;
}

} // namespace

int main() {
  bool all_pass = true;
  auto suite_start = std::chrono::steady_clock::now();
  for (const auto& criterion : kCriteria) {
    const CheckDef* def = find_check(criterion.check_name);
    if (def == nullptr) {
      std::printf("[FAIL] %s -- check \"%s\" is not registered\n", criterion.label,
                  criterion.check_name);
      all_pass = false;
      continue;
    }
    bool pass = true;
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    try {
      if (criterion.n_max == 0) {
        pass = def->run(0, detail);
      } else {
        for (int n = def->min_n; n <= criterion.n_max && pass; ++n) {
          std::string d;
          pass = def->run(n, d);
          if (!pass) detail = "n=" + std::to_string(n) + ": " + d;
        }
      }
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", criterion.label, secs,
                pass ? "" : " -- ", pass ? "" : detail.c_str());
    all_pass = all_pass && pass;
  }
  double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
  std::printf("%s in %.2fs\n", all_pass ? "acceptance suite passed" : "ACCEPTANCE FAILURES",
              total);
  return all_pass ? 0 : 1;
}
