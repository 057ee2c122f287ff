#include "oriclique/graph.hpp"

#include <bit>
#include <string>

namespace oriclique {

namespace {

std::string arc_str(Arc a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

}  // namespace

OrientedGraph OrientedGraph::build(int n, std::span<const Arc> arcs) {
  if (n < 0) fail(errc::bad_argument, "negative order");
  if (n > kMaxVertices)
    fail(errc::capacity, "order " + std::to_string(n) + " exceeds " +
                             std::to_string(kMaxVertices));
  OrientedGraph g;
  g.n_ = n;
  g.out_.assign(static_cast<std::size_t>(n), 0);
  g.in_.assign(static_cast<std::size_t>(n), 0);
  for (Arc a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      fail(errc::out_of_range, "arc " + arc_str(a));
    if (a.tail == a.head) fail(errc::self_loop, "arc " + arc_str(a));
    if ((g.out_[a.head] >> a.tail) & 1)
      fail(errc::antisymmetry, "arcs " + arc_str({a.head, a.tail}) + " and " + arc_str(a));
    if ((g.out_[a.tail] >> a.head) & 1)
      fail(errc::duplicate_arc, "arc " + arc_str(a));
    g.out_[a.tail] |= 1ull << a.head;
    g.in_[a.head] |= 1ull << a.tail;
    ++g.m_;
  }
  return g;
}

OrientedGraph OrientedGraph::build(int n, std::initializer_list<Arc> arcs) {
  return build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

OrientedGraph OrientedGraph::from_out_masks(int n, std::span<const std::uint64_t> out) {
  if (n < 0) fail(errc::bad_argument, "negative order");
  if (n > kMaxVertices) fail(errc::capacity, "order " + std::to_string(n));
  if (static_cast<int>(out.size()) != n) fail(errc::bad_argument, "row count != n");
  OrientedGraph g;
  g.n_ = n;
  g.out_.assign(out.begin(), out.end());
  g.in_.assign(static_cast<std::size_t>(n), 0);
  const std::uint64_t all = g.vertex_mask();
  for (int v = 0; v < n; ++v) {
    if (g.out_[v] & ~all) fail(errc::out_of_range, "row " + std::to_string(v));
    if ((g.out_[v] >> v) & 1) fail(errc::self_loop, "vertex " + std::to_string(v));
    std::uint64_t row = g.out_[v];
    while (row) {
      int w = std::countr_zero(row);
      row &= row - 1;
      if ((g.out_[w] >> v) & 1)
        fail(errc::antisymmetry, "arcs " + arc_str({v, w}) + " and " + arc_str({w, v}));
      g.in_[w] |= 1ull << v;
    }
    g.m_ += std::popcount(g.out_[v]);
  }
  return g;
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int v = 0; v < n_; ++v) {
    std::uint64_t row = out_[v];
    while (row) {
      int w = std::countr_zero(row);
      row &= row - 1;
      out.push_back({v, w});
    }
  }
  return out;
}

OrientedGraph remove_arc(const OrientedGraph& g, Arc a) {
  if (a.tail < 0 || a.tail >= g.order() || a.head < 0 || a.head >= g.order())
    fail(errc::out_of_range, "arc " + arc_str(a));
  if (!g.has_arc(a.tail, a.head)) fail(errc::missing_arc, "arc " + arc_str(a));
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) rows[v] = g.out_mask(v);
  rows[a.tail] &= ~(1ull << a.head);
  return OrientedGraph::from_out_masks(g.order(), rows);
}

bool has_two_dipath(const OrientedGraph& g, int u, int v) {
  if (u == v) fail(errc::bad_argument, "u == v");
  return (g.out_mask(u) & g.in_mask(v)) != 0;
}

bool sees(const OrientedGraph& g, int u, int v) {
  if (u == v) fail(errc::bad_argument, "u == v");
  if (g.adjacent(u, v)) return true;
  return (g.out_mask(u) & g.in_mask(v)) || (g.out_mask(v) & g.in_mask(u));
}

std::uint64_t see_mask(const OrientedGraph& g, int u) {
  std::uint64_t seen = g.adj_mask(u);
  std::uint64_t row = g.out_mask(u);
  while (row) {
    int w = std::countr_zero(row);
    row &= row - 1;
    seen |= g.out_mask(w);
  }
  row = g.in_mask(u);
  while (row) {
    int w = std::countr_zero(row);
    row &= row - 1;
    seen |= g.in_mask(w);
  }
  return seen & ~(1ull << u) & g.vertex_mask();
}

bool is_absolute_clique(const OrientedGraph& g) {
  const std::uint64_t all = g.vertex_mask();
  for (int v = 0; v < g.order(); ++v)
    if (see_mask(g, v) != (all & ~(1ull << v))) return false;
  return true;
}

OrientedGraph induced_subgraph(const OrientedGraph& g, std::uint64_t keep) {
  keep &= g.vertex_mask();
  std::vector<int> newid(static_cast<std::size_t>(g.order()), -1);
  int k = 0;
  for (int v = 0; v < g.order(); ++v)
    if ((keep >> v) & 1) newid[v] = k++;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(k), 0);
  for (int v = 0; v < g.order(); ++v) {
    if (newid[v] < 0) continue;
    std::uint64_t row = g.out_mask(v) & keep;
    while (row) {
      int w = std::countr_zero(row);
      row &= row - 1;
      rows[newid[v]] |= 1ull << newid[w];
    }
  }
  return OrientedGraph::from_out_masks(k, rows);
}

OrientedGraph permuted(const OrientedGraph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) fail(errc::bad_argument, "perm size != n");
  std::uint64_t hit = 0;
  for (int v = 0; v < n; ++v) {
    if (perm[v] < 0 || perm[v] >= n || ((hit >> perm[v]) & 1))
      fail(errc::bad_argument, "not a permutation");
    hit |= 1ull << perm[v];
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    std::uint64_t row = g.out_mask(v);
    while (row) {
      int w = std::countr_zero(row);
      row &= row - 1;
      rows[perm[v]] |= 1ull << perm[w];
    }
  }
  return OrientedGraph::from_out_masks(n, rows);
}

}  // namespace oriclique
