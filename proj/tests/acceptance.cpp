// Acceptance suite: one criterion per invocation, one pass/fail line each.

#include <cstdio>
#include <cstdlib>

#include "kummer/selftest.hpp"

int main(int argc, char** argv) {
  using namespace kummer;
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool ok = true;
  auto run = [&](int id) {
    CriterionResult r = run_criterion(id);
    std::printf("[%s] criterion %d: %s (%ld cases, %.2fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.cases, r.seconds);
    for (const auto& line : r.lines) std::printf("    %s\n", line.c_str());
    ok = ok && r.pass;
  };
  if (only > 0)
    run(only);
  else
    for (int id = 1; id <= 7; ++id) run(id);
  return ok ? 0 : 1;
}
