// Acceptance battery: one line per criterion, nonzero exit on any failure.
#include <cstdio>

#include "lisa/acceptance.hpp"

int main() {
  auto results = lisa::acceptance::run_all();
  bool all = true;
  for (const auto& c : results) {
    std::printf("%s\n", c.line().c_str());
    all = all && c.pass;
  }
  std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILURES");
  return all ? 0 : 1;
}
