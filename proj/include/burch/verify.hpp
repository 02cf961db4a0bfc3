#pragma once

#include <string>
#include <vector>

#include "burch/analysis.hpp"

namespace burch {

enum class VerifyLevel { fast, full };

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  bool skipped = false;  // not run at this level
  std::string detail;
};

/// Runs the twelve-part verification corpus.  fast restricts instance sizes
/// to n <= 5 and skips the n = 7 regressions; full runs everything.
std::vector<CriterionResult> run_verification(VerifyLevel level);

/// Randomized Groebner-engine cross-checks: S-pair reduction certificates,
/// saturation idempotence, intersection containment and basis uniqueness
/// under generator recombination.  Returns the number of failed cases.
int engine_selfcheck(int cases, unsigned long seed);

/// All basic entry sequences of length n-1 (words over {x, y} using both).
std::vector<std::string> all_sequences(int n);

}  // namespace burch
