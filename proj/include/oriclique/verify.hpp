#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oriclique {

enum class VerifyLevel { quick, full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::quick;
  int jobs = 1;
  // Extra pruned circulant sweep beyond the exhaustive/pruned agreement
  // range; odd orders up to this bound are censused in full mode.
  int circulant_pruned_max = 49;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  VerifyLevel level = VerifyLevel::quick;
  std::vector<CriterionResult> criteria;
  bool all_passed() const;
};

/// Runs the built-in verification suite: ten checks covering the headline
/// claims of the toolkit (exact solver vs reference, census results, the
/// extension constructions, circulant scans). `progress`, if given, receives
/// one line per finished criterion.
VerifyReport run_verification_suite(const VerifyOptions& opts,
                                    std::ostream* progress = nullptr);

}  // namespace oriclique
