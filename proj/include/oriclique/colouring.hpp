#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oriclique/graph.hpp"

namespace oriclique {

enum class Direction : unsigned char { none = 0, forward, backward };

/// Witness for an oriented k-colouring: the colour classes partition the
/// vertices, each class is independent, and all arcs between two classes
/// share one direction (recorded in `directions`).
struct ColouringCertificate {
  std::vector<std::vector<int>> classes;            // each sorted ascending
  std::vector<std::vector<Direction>> directions;   // k x k, diagonal none
  int colour_count() const { return static_cast<int>(classes.size()); }
};

/// Reason the certificate is invalid for g, or nullopt if it checks out.
std::optional<std::string> certificate_violation(const OrientedGraph& g,
                                                 const ColouringCertificate& c);
bool validate_certificate(const OrientedGraph& g, const ColouringCertificate& c);

/// Oriented k-colouring search (branch and bound over colour classes).
std::optional<ColouringCertificate> find_colouring(const OrientedGraph& g, int k);

struct ChiResult {
  int chromatic_number = 0;
  ColouringCertificate certificate;
};

/// Exact oriented chromatic number with witness. EmptyGraph if n = 0.
ChiResult oriented_chromatic_number(const OrientedGraph& g);

/// For an absolute clique g and arc a: does removing a admit an (n-2)-
/// colouring? Decided combinatorially by enumerating the two merge shapes
/// (two disjoint non-seeing pairs with compatible directions, or one
/// pairwise non-seeing triple). NotAClique if g is not an absolute clique.
bool clique_arc_drop_two(const OrientedGraph& g, Arc a);

/// Removing any arc drops chi_o by exactly 2. False for arcless graphs.
/// Verdict-only fast path: stops at the first failing arc and uses the merge
/// shortcut when g is an absolute clique.
bool is_deeply_critical(const OrientedGraph& g);

struct ArcCriticality {
  Arc arc;
  int chi_without = 0;
  int drop = 0;
};

struct CriticalityReport {
  int chi = 0;
  bool deeply_critical = false;
  std::vector<ArcCriticality> per_arc;  // lexicographic arc order
};

/// Full per-arc table: chi_o(g - a) probed at chi-2 first, then upward.
CriticalityReport criticality_report(const OrientedGraph& g);

}  // namespace oriclique
