#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace glorbit {

/// A named boolean assertion emitted by certifying routines and reports.
struct Check {
  std::string name;
  bool passed = false;
};

using CheckList = std::vector<Check>;

inline bool all_passed(const CheckList& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

}  // namespace glorbit
