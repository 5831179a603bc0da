#pragma once

#include <string>
#include <vector>

#include "a2/lifting.hpp"

namespace a2::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The invariant suite for one lifting: q-binomials, coalgebra laws,
/// confluence, hypotheses, section laws, reconstruction and table regressions.
std::vector<CheckResult> run_checks(const Lifting& L);

}  // namespace a2::cli
