#pragma once

#include <functional>
#include <string>
#include <vector>

namespace absord {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Exhaustive desk-scale verification of the structural identities the
// library implements.  Every comparison is exact; the detail string
// summarizes the coverage or points at the first failure.  The callback,
// when given, receives each result as soon as its check finishes.
std::vector<CheckResult> run_acceptance_suite(
    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace absord
