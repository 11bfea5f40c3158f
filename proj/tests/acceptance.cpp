// Acceptance gate: runs every structural check at desk scale and prints one
// line per criterion.  Exit status is nonzero when any criterion fails.
#include <cstdio>

#include "absord/verify.hpp"

int main() {
  int index = 0;
  int failed = 0;
  auto on_result = [&](const absord::CheckResult& r) {
    ++index;
    if (!r.pass) ++failed;
    std::printf("%s %2d %s: %s\n", r.pass ? "PASS" : "FAIL", index,
                r.name.c_str(), r.detail.c_str());
    std::fflush(stdout);
  };
  auto results = absord::run_acceptance_suite(on_result);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed ? 1 : 0;
}
