#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oriclique/graph.hpp"

namespace oriclique {

/// Circulant digraph C(n, S): arc i -> j iff (j - i) mod n lies in S.
/// Valid sets are anti-symmetric: k in S forbids (n - k) mod n in S.
struct CirculantSpec {
  int n = 0;
  std::vector<int> set;  // sorted ascending, elements in 1..n-1
};

/// BadConnectionSet on out-of-range, duplicate or symmetric elements.
void validate(const CirculantSpec& spec);
OrientedGraph build_circulant(const CirculantSpec& spec);

struct ArithmeticDiagnosis {
  bool cover = false;    // every k is x+y or -(x+y) with x,y in S u {0}
  bool unique = false;   // for h in S the only expression of 2h is h+h
  int witness_k = -1;    // a residue violating the failed condition
  bool ok() const { return cover && unique; }
};

/// Residue-arithmetic test deciding whether C(n, S) is a deeply critical
/// oriented clique, without building the graph. Empty S fails (no arcs).
ArithmeticDiagnosis arithmetic_conditions(const CirculantSpec& spec);
bool arithmetic_dcoc_check(const CirculantSpec& spec);

/// Smallest (lexicographic, as sorted element lists) image of S under
/// multiplication by units of Z_n, and the orbit size.
std::vector<int> multiplier_canonical(const CirculantSpec& spec);
int multiplier_class_size(const CirculantSpec& spec);

enum class ScanMode { pruned, exhaustive };

struct CirculantScanOptions {
  ScanMode mode = ScanMode::pruned;
  int jobs = 1;
  std::string checkpoint_path;  // empty: no checkpointing
  int limit_chunks = -1;        // stop after this many top-level branches (<0: all)
};

struct CirculantClass {
  std::vector<int> set;  // canonical representative
  int class_size = 0;    // distinct multiplier images
};

struct CirculantScanResult {
  int n = 0;
  ScanMode mode = ScanMode::pruned;
  std::vector<std::vector<int>> found;   // every passing S, sorted
  std::vector<CirculantClass> classes;   // one entry per multiplier class
  std::uint64_t leaves = 0;              // complete sets evaluated
  std::uint64_t nodes = 0;               // search nodes expanded
  double elapsed_seconds = 0;
  bool resumed = false;
  bool completed = true;
};

/// Enumerates all valid connection sets for order n (one branch per residue
/// pair {k, n-k}: absent / k / n-k) and reports those whose circulant is a
/// deeply critical clique per the arithmetic test. Pruned mode cuts a branch
/// as soon as the uniqueness condition is violated; exhaustive mode evaluates
/// every leaf and is kept as a correctness oracle for n <= 33.
CirculantScanResult scan_circulants(int n, const CirculantScanOptions& opts = {});

/// Scans every even order up to n_max (inclusive): expects zero finds and
/// asserts the mechanism that forbids them (n/2 is never a valid element, and
/// any x, y in S with x + y = +-n/2 breaks uniqueness at 2x).
bool verify_no_even_circulant_dcoc(int n_max, int jobs = 1);

}  // namespace oriclique
