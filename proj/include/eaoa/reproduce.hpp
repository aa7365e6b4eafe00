#pragma once

#include <string>
#include <vector>

namespace eaoa {

struct CriterionResult {
  std::string id;
  bool passed = false;
  std::string detail;  // first failure, or a short summary when passing
};

// Identifiers accepted by run_criteria, in execution order.
std::vector<std::string> criterion_ids();

// Run the named reproduction criteria ("all" runs every one). Each criterion
// re-derives a known property of the built-in example codes and compares
// against frozen expected values. Throws std::invalid_argument on an unknown
// id.
std::vector<CriterionResult> run_criteria(const std::vector<std::string>& ids,
                                          unsigned threads = 0);

}  // namespace eaoa
