#include "oriclique/extension.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "oriclique/colouring.hpp"

namespace oriclique {

namespace {

std::array<std::uint64_t, 3> part_masks(const OrientedGraph& g, const ExtendingPartition& p) {
  std::array<std::uint64_t, 3> mask{};
  const std::array<const std::vector<int>*, 3> parts{&p.x1, &p.x2, &p.x3};
  std::uint64_t seen = 0;
  for (int i = 0; i < 3; ++i)
    for (int v : *parts[i]) {
      if (v < 0 || v >= g.order())
        fail(errc::bad_partition, "vertex " + std::to_string(v) + " outside the graph");
      if ((seen >> v) & 1)
        fail(errc::bad_partition, "vertex " + std::to_string(v) + " listed twice");
      seen |= 1ull << v;
      mask[i] |= 1ull << v;
    }
  if (seen != g.vertex_mask()) fail(errc::bad_partition, "parts do not cover the vertex set");
  return mask;
}

bool conditions_on_masks(const OrientedGraph& g, const std::array<std::uint64_t, 3>& mask,
                         PartitionDiagnosis& d) {
  d.forward_only = true;
  for (int i = 0; i < 3 && d.forward_only; ++i) {
    const int j = (i + 1) % 3;
    std::uint64_t m = mask[j];
    while (m) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if (g.out_mask(v) & mask[i]) { d.forward_only = false; break; }
    }
  }
  d.private_in = true;
  for (int i = 0; i < 3 && d.private_in; ++i) {
    const int j = (i + 1) % 3;
    std::uint64_t us = mask[i];
    while (us) {
      const int u = std::countr_zero(us);
      us &= us - 1;
      bool has = false;
      std::uint64_t vs = mask[j];
      while (vs && !has) {
        const int v = std::countr_zero(vs);
        vs &= vs - 1;
        has = (g.in_mask(v) & mask[i]) == (1ull << u);
      }
      if (!has) { d.private_in = false; break; }
    }
  }
  d.private_out = true;
  for (int i = 0; i < 3 && d.private_out; ++i) {
    const int j = (i + 1) % 3;
    std::uint64_t vs = mask[j];
    while (vs) {
      const int v = std::countr_zero(vs);
      vs &= vs - 1;
      bool has = false;
      std::uint64_t us = mask[i];
      while (us && !has) {
        const int u = std::countr_zero(us);
        us &= us - 1;
        has = (g.out_mask(u) & mask[j]) == (1ull << v);
      }
      if (!has) { d.private_out = false; break; }
    }
  }
  return d.ok();
}

std::vector<int> mask_to_sorted(std::uint64_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

}  // namespace

PartitionDiagnosis check_extending_partition(const OrientedGraph& g,
                                             const ExtendingPartition& p) {
  PartitionDiagnosis d;
  conditions_on_masks(g, part_masks(g, p), d);
  return d;
}

bool is_extending_partition(const OrientedGraph& g, const ExtendingPartition& p) {
  return check_extending_partition(g, p).ok();
}

std::optional<ExtendingPartition> find_extending_partition(const OrientedGraph& g) {
  const int n = g.order();
  std::array<std::uint64_t, 3> mask{};
  std::optional<ExtendingPartition> result;

  auto dfs = [&](auto&& self, int v) -> bool {
    if (v == n) {
      PartitionDiagnosis d;
      if (!conditions_on_masks(g, mask, d)) return false;
      result = ExtendingPartition{mask_to_sorted(mask[0]), mask_to_sorted(mask[1]),
                                  mask_to_sorted(mask[2])};
      return true;
    }
    for (int c = 0; c < 3; ++c) {
      // keep condition (i): an arc u->v is forbidden when u's part follows v's
      const std::uint64_t bad_in = mask[(c + 1) % 3];   // tails that may not reach part c
      const std::uint64_t bad_out = mask[(c + 2) % 3];  // heads part c may not reach
      if ((g.in_mask(v) & bad_in) || (g.out_mask(v) & bad_out)) continue;
      mask[c] |= 1ull << v;
      if (self(self, v + 1)) return true;
      mask[c] &= ~(1ull << v);
    }
    return false;
  };
  dfs(dfs, 0);
  return result;
}

SixExtension six_extension(const OrientedGraph& g, const ExtendingPartition& p) {
  const auto mask = part_masks(g, p);
  PartitionDiagnosis d;
  if (!conditions_on_masks(g, mask, d))
    fail(errc::not_extending, std::string("partition fails condition ") +
                                  (!d.forward_only  ? "(i)"
                                   : !d.private_in  ? "(ii)"
                                                    : "(iii)"));
  const int n = g.order();
  std::vector<Arc> arcs = g.arcs();
  // new vertices, in id order: x1- x1+ x2- x2+ x3- x3+
  const auto lo = [n](int i) { return n + 2 * i; };
  const auto hi = [n](int i) { return n + 2 * i + 1; };
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    arcs.push_back({lo(i), hi(j)});  // xi- -> xj+
    arcs.push_back({hi(i), lo(j)});  // xi+ -> xj-
    std::uint64_t m = mask[i];
    while (m) {
      const int x = std::countr_zero(m);
      m &= m - 1;
      arcs.push_back({lo(i), x});
      arcs.push_back({x, hi(i)});
    }
  }
  SixExtension out{OrientedGraph::build(n + 6, arcs), {}};
  std::array<std::vector<int>*, 3> parts{&out.partition.x1, &out.partition.x2,
                                         &out.partition.x3};
  for (int i = 0; i < 3; ++i) {
    *parts[i] = mask_to_sorted(mask[i]);
    parts[i]->push_back(lo(i));
    parts[i]->push_back(hi(i));
  }
  return out;
}

OrientedGraph four_extension(const OrientedGraph& g, const ExtendingPartition& p) {
  const SixExtension six = six_extension(g, p);
  const int n = g.order();
  const std::uint64_t drop = (1ull << (n + 1)) | (1ull << (n + 2));  // x1+, x2-
  return induced_subgraph(six.graph, six.graph.vertex_mask() & ~drop);
}

OrientedGraph two_extension(const OrientedGraph& g, const ExtendingPartition& p) {
  const SixExtension six = six_extension(g, p);
  const int n = g.order();
  const std::uint64_t drop = (1ull << n) | (1ull << (n + 3)) | (1ull << (n + 4)) |
                             (1ull << (n + 5));  // x1-, x2+, x3-, x3+
  return induced_subgraph(six.graph, six.graph.vertex_mask() & ~drop);
}

OrientedGraph dcoc_order9() {
  return OrientedGraph::build(9, {{5, 8},
                                  {8, 2},
                                  {2, 5},
                                  {2, 7},
                                  {6, 2},
                                  {8, 3},
                                  {4, 8},
                                  {0, 5},
                                  {5, 1},
                                  {7, 0},
                                  {1, 4},
                                  {3, 6},
                                  {0, 3},
                                  {4, 7},
                                  {6, 1}});
}

ExtendingPartition dcoc_order9_partition() {
  return {{2, 6, 7}, {0, 1, 5}, {3, 4, 8}};
}

OrientedGraph generate_odd_dcoc(int n) {
  if (n >= 0 && n % 2 == 0)
    fail(errc::even_order, "no deeply critical oriented clique has even order");
  if (n < 5 || n == 7)
    fail(errc::no_such_order,
         "no deeply critical oriented clique of order " + std::to_string(n) + " exists");
  if (n > OrientedGraph::kMaxVertices)
    fail(errc::capacity, "order " + std::to_string(n) + " exceeds the vertex capacity");

  OrientedGraph g =
      n == 5 ? OrientedGraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})
             : dcoc_order9();
  if (n > 5) {
    ExtendingPartition p = dcoc_order9_partition();
    const int rem = (n - 9) % 6;  // 0, 2 or 4 — odd n, so never 1/3/5
    while (g.order() + 6 <= n - rem) {
      SixExtension six = six_extension(g, p);
      g = std::move(six.graph);
      p = std::move(six.partition);
    }
    if (rem == 2) g = two_extension(g, p);
    else if (rem == 4) g = four_extension(g, p);
  }
  if (g.order() != n || !is_deeply_critical(g))
    throw std::logic_error("construction postcondition failed at order " + std::to_string(n));
  return g;
}

}  // namespace oriclique
