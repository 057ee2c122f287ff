// Acceptance gate: runs the whole verification suite at full depth and
// enforces a wall-clock budget per criterion.  Exits non-zero on any miss.
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <thread>

#include "oriclique/verify.hpp"

int main() {
  using namespace oriclique;

  VerifyOptions opts;
  opts.level = VerifyLevel::full;
  opts.jobs = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  opts.circulant_pruned_max = 49;

  // seconds; generous multiples of measured times so slow machines still pass
  const double budget[10] = {1.0,    10800.0, 5.0,   10.0,  60.0,
                             1800.0, 300.0,   600.0, 300.0, 3600.0};

  std::printf("acceptance suite: level=full jobs=%d\n", opts.jobs);
  std::fflush(stdout);
  const VerifyReport report = run_verification_suite(opts, &std::cout);

  bool ok = true;
  for (const CriterionResult& c : report.criteria) {
    const double cap = budget[c.id - 1];
    const bool in_time = c.seconds <= cap;
    const bool pass = c.passed && in_time;
    ok = ok && pass;
    std::printf("%s criterion %d: %s (%.2fs of %.0fs)%s\n", pass ? "PASS" : "FAIL",
                c.id, c.name.c_str(), c.seconds, cap,
                c.passed && !in_time ? " [over budget]" : "");
    if (!c.passed) std::printf("       %s\n", c.detail.c_str());
  }
  std::printf("acceptance: %s\n", ok ? "ALL PASSED" : "FAILURES PRESENT");
  return ok ? 0 : 1;
}
