// Acceptance gate: runs every reproduction criterion and prints one verdict
// line per criterion. Exits nonzero when any criterion fails.
#include <cstdio>

#include "eaoa/reproduce.hpp"

int main() {
  bool all_ok = true;
  for (const eaoa::CriterionResult& r : eaoa::run_criteria({"all"})) {
    std::printf("%s %s: %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && r.passed;
  }
  return all_ok ? 0 : 1;
}
