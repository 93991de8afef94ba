#pragma once

#include <iosfwd>
#include <vector>

#include "wiman/exclusion.hpp"

namespace wiman {

struct SelftestOptions {
  std::vector<RecordedFact> facts;  // empty: use the built-in records
  u64 seed = 0;
};

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;
};

/// The full acceptance suite: one pass/fail line per criterion is written to
/// `progress` as it completes.
std::vector<CriterionResult> run_acceptance(const SelftestOptions& opt, std::ostream& progress);

}  // namespace wiman
