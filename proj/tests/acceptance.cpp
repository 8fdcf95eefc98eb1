// Runs acceptance criteria 1-11 and prints one PASS/FAIL line for each.
// Exit status is 0 only when every criterion passes.

#include "xnpr/verify.hpp"

#include <cstdio>

int main() {
  int failed = 0;
  double total = 0;
  for (int i = 1; i <= 11; ++i) {
    const auto r = xnpr::verify::criterion(i);
    total += r.seconds;
    if (!r.passed) ++failed;
    std::printf("%s criterion %2d  %-42s %8.3fs  %s\n", r.passed ? "PASS" : "FAIL", i, r.name.c_str(), r.seconds,
                r.detail.c_str());
  }
  std::printf("%d/11 criteria passed in %.3fs\n", 11 - failed, total);
  return failed == 0 ? 0 : 1;
}
