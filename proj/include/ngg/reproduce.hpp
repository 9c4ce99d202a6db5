#pragma once

#include <string>
#include <vector>

namespace ngg {

struct CriterionResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;  // measured wall time; informational, never serialized
  std::string detail;    // one-line failure explanation, empty on pass

  bool operator==(const CriterionResult&) const = default;
};

struct ReproductionReport {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;

  bool operator==(const ReproductionReport&) const = default;
};

/// Runs the built-in reproduction suite: every published result this
/// library is expected to reproduce, each as one named yes/no criterion.
/// Backs the `paper-check` CLI command; the acceptance test binary adds
/// wall-time budgets on top.
ReproductionReport run_reproduction_suite();

}  // namespace ngg
