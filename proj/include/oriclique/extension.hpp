#pragma once

#include <optional>
#include <vector>

#include "oriclique/graph.hpp"

namespace oriclique {

/// Ordered partition (X1, X2, X3) of the vertex set.
struct ExtendingPartition {
  std::vector<int> x1, x2, x3;  // each sorted ascending
};

struct PartitionDiagnosis {
  bool forward_only = false;  // (i)   no arc from X_{i+1} back to X_i
  bool private_in = false;    // (ii)  every u in X_i has a private out-neighbour in X_{i+1}
  bool private_out = false;   // (iii) every v in X_{i+1} is some u's unique successor there
  bool ok() const { return forward_only && private_in && private_out; }
};

/// BadPartition if the three parts overlap or miss vertices.
PartitionDiagnosis check_extending_partition(const OrientedGraph& g,
                                             const ExtendingPartition& p);
bool is_extending_partition(const OrientedGraph& g, const ExtendingPartition& p);

/// Lexicographically least extending partition, if one exists.
std::optional<ExtendingPartition> find_extending_partition(const OrientedGraph& g);

struct SixExtension {
  OrientedGraph graph;
  ExtendingPartition partition;  // induced extending partition of the result
};

/// Adds x1-,x1+,x2-,x2+,x3-,x3+ (ids n..n+5 in that order), the six hub arcs
/// among them and the attachment arcs xi- -> Xi -> xi+. NotExtending if p is
/// not an extending partition of g.
SixExtension six_extension(const OrientedGraph& g, const ExtendingPartition& p);

/// Six-extension with x1+ and x2- deleted (order n+4).
OrientedGraph four_extension(const OrientedGraph& g, const ExtendingPartition& p);

/// Six-extension with x1-, x2+, x3-, x3+ deleted (order n+2).
OrientedGraph two_extension(const OrientedGraph& g, const ExtendingPartition& p);

/// The order-9 base deeply critical clique used by generate_odd_dcoc, with
/// its extending partition.
OrientedGraph dcoc_order9();
ExtendingPartition dcoc_order9_partition();

/// Deeply critical oriented clique of odd order n. NoSuchOrder for 1, 3, 7;
/// EvenOrder for even n. The result is verified before it is returned.
OrientedGraph generate_odd_dcoc(int n);

}  // namespace oriclique
