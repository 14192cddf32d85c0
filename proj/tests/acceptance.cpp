// Release gate: runs every acceptance criterion and prints one line per check.
// Exit status 0 only when all nine pass.

#include <cstdio>

#include "ccm/acceptance.hpp"

int main() {
  const auto results = ccm::acceptance::run_all();
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] %-22s %s (%.1fs)\n", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.detail.c_str(), r.seconds);
    all = all && r.passed;
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
  return all ? 0 : 1;
}
