#pragma once

#include <cstdint>
#include <span>

#include "oriclique/graph.hpp"

namespace oriclique {

// Slow reference implementations used by the verification suite and the
// tests as an independent route to the same answers. Nothing here shares
// search machinery with the production solver or generator.

/// Checks the two colouring conditions straight off the arc list.
bool reference_valid_colouring(const OrientedGraph& g, std::span<const int> colour);

/// Minimum class count over every set partition of the vertices (restricted
/// growth string enumeration). Intended for n <= 8.
int reference_chi_o(const OrientedGraph& g);

/// Number of isomorphism classes of oriented graphs of order n, by
/// enumerating all 3^(n(n-1)/2) labelled graphs and deduplicating. n <= 5.
std::uint64_t labelled_class_count(int n);

}  // namespace oriclique
