#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oriclique/graph.hpp"

namespace oriclique {

/// Exhaustive isomorph-free generation is supported up to this order.
inline constexpr int kExhaustiveLimit = 7;

using GraphVisitor = std::function<void(const OrientedGraph&)>;

/// Visits one representative per isomorphism class of oriented graphs of
/// order n, in a deterministic order. Canonical-augmentation: each
/// (k-1)-vertex representative is extended by one vertex in all 3^(k-1) ways
/// and a child is kept only if deleting its canonical last vertex recovers
/// that parent. Capacity error outside 1..kExhaustiveLimit.
void for_each_oriented_graph(int n, const GraphVisitor& visit);
std::uint64_t count_oriented_graphs(int n);

enum class CensusFilter { cliques_first, all };

struct CensusOptions {
  CensusFilter filter = CensusFilter::cliques_first;
  int jobs = 1;
  std::string checkpoint_path;
  int limit_chunks = -1;  // stop after this many parent chunks (<0: all)
};

struct ScanReport {
  int n = 0;
  std::uint64_t generated = 0;
  std::uint64_t cliques = 0;
  std::uint64_t dcoc = 0;
  std::vector<std::string> witnesses;  // deeply critical cliques, compact form
  double elapsed_seconds = 0;
  std::string parameters;
  bool resumed = false;
  bool completed = true;
};

/// Full-census count of absolute cliques and deeply critical cliques at
/// order n. cliques_first skips the criticality check on non-cliques; both
/// filters count the same dcoc set.
ScanReport census_dcoc(int n, const CensusOptions& opts = {});

/// Labelled random sampling: each unordered pair is independently none/
/// forward/backward with equal probability. Reproducible for a fixed
/// (n, trials, seed); witnesses are deduplicated.
ScanReport random_probe(int n, std::uint64_t trials, std::uint64_t seed);

}  // namespace oriclique
