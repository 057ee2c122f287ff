#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "oriclique/errors.hpp"

namespace oriclique {

struct Arc {
  int tail = 0;
  int head = 0;
  friend constexpr bool operator==(const Arc&, const Arc&) = default;
  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

/// Oriented graph on vertices 0..n-1: irreflexive and anti-symmetric by
/// construction (no loops, no digons). Immutable value type. Adjacency is one
/// 64-bit row per vertex, so neighbourhood tests are single word operations.
class OrientedGraph {
 public:
  static constexpr int kMaxVertices = 64;

  OrientedGraph() = default;

  static OrientedGraph build(int n, std::span<const Arc> arcs);
  static OrientedGraph build(int n, std::initializer_list<Arc> arcs);
  /// Adopts prebuilt out-rows; still enforces both invariants.
  static OrientedGraph from_out_masks(int n, std::span<const std::uint64_t> out);

  int order() const noexcept { return n_; }
  int arc_count() const noexcept { return m_; }
  std::uint64_t vertex_mask() const noexcept {
    return n_ == 64 ? ~0ull : (1ull << n_) - 1;
  }
  std::uint64_t out_mask(int v) const { check_vertex(v); return out_[static_cast<std::size_t>(v)]; }
  std::uint64_t in_mask(int v) const { check_vertex(v); return in_[static_cast<std::size_t>(v)]; }
  std::uint64_t adj_mask(int v) const { check_vertex(v); return out_[v] | in_[v]; }
  bool has_arc(int u, int v) const { return (out_mask(u) >> check_vertex(v)) & 1; }
  bool adjacent(int u, int v) const { return (adj_mask(u) >> check_vertex(v)) & 1; }
  /// Arcs in lexicographic (tail, head) order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

 private:
  int check_vertex(int v) const {
    if (v < 0 || v >= n_) fail(errc::out_of_range, "vertex " + std::to_string(v));
    return v;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> out_, in_;
};

/// Copy of g without the given arc; MissingArc if absent.
OrientedGraph remove_arc(const OrientedGraph& g, Arc a);

/// True iff some w has arcs u->w and w->v.
bool has_two_dipath(const OrientedGraph& g, int u, int v);

/// u sees v: adjacent, or joined by a 2-dipath in either direction.
bool sees(const OrientedGraph& g, int u, int v);

/// Mask of vertices u sees (u excluded).
std::uint64_t see_mask(const OrientedGraph& g, int u);

/// Every pair of distinct vertices sees each other; equivalently chi_o = n.
bool is_absolute_clique(const OrientedGraph& g);

/// Subgraph induced on the vertices in `keep`, relabelled by increasing old id.
OrientedGraph induced_subgraph(const OrientedGraph& g, std::uint64_t keep);

/// Relabelled copy; perm[old] = new.
OrientedGraph permuted(const OrientedGraph& g, std::span<const int> perm);

}  // namespace oriclique
