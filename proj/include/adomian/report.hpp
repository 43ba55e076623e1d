#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace adomian {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Named pass/fail results of a validation step.
struct CheckReport {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void append(const CheckReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

}  // namespace adomian
