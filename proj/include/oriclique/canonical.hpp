#pragma once

#include <compare>
#include <string>
#include <vector>

#include "oriclique/graph.hpp"

namespace oriclique {

/// Hard cap for canonical labelling; the pruned search stays practical here.
inline constexpr int kCanonicalCapacity = 12;

/// Permutation-invariant identifier: equal codes iff isomorphic.
/// Layout: byte 0 is the order, then the row-major adjacency bits of the
/// canonical labelling, packed MSB-first.
struct CanonicalCode {
  std::string bytes;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  std::string hex() const;
};

struct CanonicalForm {
  CanonicalCode code;
  std::vector<int> to_canonical;  // old vertex -> canonical position
};

/// Lexicographically minimal row-major adjacency matrix over all vertex
/// orders consistent with iterated (out-degree, in-degree) refinement.
/// Capacity error above kCanonicalCapacity.
CanonicalForm canonical_form(const OrientedGraph& g);
CanonicalCode canonical_code(const OrientedGraph& g);

}  // namespace oriclique
