#include "oriclique/colouring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cstdint>

namespace oriclique {

namespace {

// Greedy pairwise-seeing set: every two members must get distinct colours,
// so its size lower-bounds chi_o.
int seeing_lower_bound(const OrientedGraph& g) {
  const int n = g.order();
  std::array<std::uint64_t, 64> see{};
  for (int v = 0; v < n; ++v) see[v] = see_mask(g, v);
  std::array<int, 64> order{};
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
    int da = std::popcount(g.adj_mask(a)), db = std::popcount(g.adj_mask(b));
    return da != db ? da > db : a < b;
  });
  std::uint64_t t = 0;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if ((see[v] & t) == t) t |= 1ull << v;
  }
  return std::popcount(t);
}

// Branch and bound: vertices are assigned in descending degree order to an
// existing colour class or the next fresh one. A class assignment is legal
// when the class stays independent and no ordered class pair ends up with
// arcs in both directions. Existence mode stops at the first complete
// assignment; optimisation mode keeps searching below the incumbent.
struct Solver {
  int n = 0;
  std::array<std::uint64_t, 64> out{}, adj{};
  std::array<int, 64> order{};
  int limit = 0;       // hard cap on classes
  bool first_only = false;
  int lower_bound = 1;

  std::array<std::uint64_t, 64> cls_mask{}, cls_out{};
  int used = 0;
  int best = INT_MAX;
  std::array<std::uint64_t, 64> best_mask{};
  int best_used = 0;
  bool found = false;
  bool stop = false;

  bool direction_ok(int v, int c) const {
    const std::uint64_t vbit = 1ull << v;
    const std::uint64_t out_c = cls_out[c] | out[v];
    const std::uint64_t mask_c = cls_mask[c] | vbit;
    for (int d = 0; d < used; ++d) {
      if (d == c) continue;
      if ((out_c & cls_mask[d]) && (cls_out[d] & mask_c)) return false;
    }
    return true;
  }

  void leaf() {
    if (first_only) {
      best_mask = cls_mask;
      best_used = used;
      found = true;
      stop = true;
      return;
    }
    if (used < best) {
      best = used;
      best_mask = cls_mask;
      best_used = used;
      found = true;
      if (best <= lower_bound) stop = true;
    }
  }

  void rec(int t) {
    if (stop) return;
    if (t == n) { leaf(); return; }
    if (!first_only && used >= best) return;
    const int v = order[t];
    const std::uint64_t vbit = 1ull << v;
    const int new_cap = first_only ? limit : std::min(limit, best - 1);
    for (int c = 0; c <= used && !stop; ++c) {
      if (c == used) {
        if (used >= new_cap) break;
        if (!direction_ok(v, c)) break;  // v alone can close a 2-dipath
        cls_mask[c] = vbit;
        cls_out[c] = out[v];
        ++used;
        rec(t + 1);
        --used;
        cls_mask[c] = 0;
        cls_out[c] = 0;
      } else {
        if (cls_mask[c] & adj[v]) continue;
        if (!direction_ok(v, c)) continue;
        const std::uint64_t save_out = cls_out[c];
        cls_mask[c] |= vbit;
        cls_out[c] |= out[v];
        rec(t + 1);
        cls_out[c] = save_out;
        cls_mask[c] &= ~vbit;
      }
    }
  }

  void init(const OrientedGraph& g) {
    n = g.order();
    for (int v = 0; v < n; ++v) {
      out[v] = g.out_mask(v);
      adj[v] = g.adj_mask(v);
      order[v] = v;
    }
    std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
      int da = std::popcount(adj[a]), db = std::popcount(adj[b]);
      return da != db ? da > db : a < b;
    });
  }
};

ColouringCertificate certificate_from_masks(const OrientedGraph& g,
                                            std::span<const std::uint64_t> masks) {
  const int k = static_cast<int>(masks.size());
  ColouringCertificate cert;
  cert.classes.resize(static_cast<std::size_t>(k));
  std::vector<std::uint64_t> outs(static_cast<std::size_t>(k), 0);
  for (int c = 0; c < k; ++c) {
    std::uint64_t m = masks[c];
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      cert.classes[c].push_back(v);
      outs[c] |= g.out_mask(v);
    }
  }
  cert.directions.assign(static_cast<std::size_t>(k),
                         std::vector<Direction>(static_cast<std::size_t>(k), Direction::none));
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d) {
      if (c == d) continue;
      if (outs[c] & masks[d]) cert.directions[c][d] = Direction::forward;
      else if (outs[d] & masks[c]) cert.directions[c][d] = Direction::backward;
    }
  return cert;
}

ColouringCertificate identity_certificate(const OrientedGraph& g) {
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) masks[v] = 1ull << v;
  return certificate_from_masks(g, masks);
}

}  // namespace

std::optional<std::string> certificate_violation(const OrientedGraph& g,
                                                 const ColouringCertificate& c) {
  const int n = g.order();
  const int k = c.colour_count();
  if (static_cast<int>(c.directions.size()) != k) return "directions size != class count";
  std::uint64_t covered = 0;
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    if (c.classes[i].empty()) return "empty class " + std::to_string(i);
    for (int v : c.classes[i]) {
      if (v < 0 || v >= n) return "vertex out of range";
      if ((covered >> v) & 1) return "vertex " + std::to_string(v) + " coloured twice";
      covered |= 1ull << v;
      masks[i] |= 1ull << v;
    }
  }
  if (covered != g.vertex_mask()) return "classes do not cover the vertex set";
  for (int i = 0; i < k; ++i) {
    std::uint64_t m = masks[i];
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (g.adj_mask(v) & masks[i])
        return "class " + std::to_string(i) + " is not independent";
    }
  }
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(c.directions[i].size()) != k) return "ragged directions";
    for (int j = 0; j < k; ++j) {
      bool fwd = false, bwd = false;
      std::uint64_t m = masks[i];
      while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (g.out_mask(v) & masks[j]) fwd = true;
        if (g.in_mask(v) & masks[j]) bwd = true;
      }
      if (i == j) {
        if (c.directions[i][j] != Direction::none) return "diagonal direction set";
        continue;
      }
      if (fwd && bwd)
        return "classes " + std::to_string(i) + "," + std::to_string(j) +
               " joined in both directions";
      Direction want = fwd ? Direction::forward : bwd ? Direction::backward : Direction::none;
      if (c.directions[i][j] != want)
        return "direction entry " + std::to_string(i) + "," + std::to_string(j) +
               " does not match the arcs";
    }
  }
  return std::nullopt;
}

bool validate_certificate(const OrientedGraph& g, const ColouringCertificate& c) {
  return !certificate_violation(g, c).has_value();
}

std::optional<ColouringCertificate> find_colouring(const OrientedGraph& g, int k) {
  if (k < 0) fail(errc::bad_argument, "negative colour count");
  const int n = g.order();
  if (n == 0) return ColouringCertificate{};
  if (k == 0) return std::nullopt;
  if (k >= n) return identity_certificate(g);
  if (seeing_lower_bound(g) > k) return std::nullopt;
  Solver s;
  s.init(g);
  s.limit = k;
  s.first_only = true;
  s.rec(0);
  if (!s.found) return std::nullopt;
  return certificate_from_masks(
      g, std::span<const std::uint64_t>(s.best_mask.data(), static_cast<std::size_t>(s.best_used)));
}

ChiResult oriented_chromatic_number(const OrientedGraph& g) {
  const int n = g.order();
  if (n == 0) fail(errc::empty_graph, "chi_o is undefined on the empty graph");
  const int lb = seeing_lower_bound(g);
  if (lb == n) return {n, identity_certificate(g)};
  Solver s;
  s.init(g);
  s.limit = n;
  s.first_only = false;
  s.lower_bound = lb;
  // seed the incumbent with the trivial all-singleton colouring
  s.best = n;
  s.found = true;
  for (int v = 0; v < n; ++v) s.best_mask[v] = 1ull << v;
  s.best_used = n;
  s.rec(0);
  return {s.best, certificate_from_masks(
                      g, std::span<const std::uint64_t>(s.best_mask.data(),
                                                        static_cast<std::size_t>(s.best_used)))};
}

bool clique_arc_drop_two(const OrientedGraph& g, Arc a) {
  if (!is_absolute_clique(g)) fail(errc::not_a_clique, "merge shortcut needs an absolute clique");
  const OrientedGraph h = remove_arc(g, a);
  const int n = h.order();
  // Mergeable pair = non-seeing pair; merging it keeps every singleton pair
  // consistent. Two pairs additionally need one direction between them.
  std::vector<std::pair<int, int>> pairs;
  std::array<std::uint64_t, 64> ns{};
  for (int u = 0; u < n; ++u) {
    const std::uint64_t s = see_mask(h, u);
    ns[u] = ~s & ~(1ull << u) & h.vertex_mask();
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((ns[u] >> v) & 1) pairs.emplace_back(u, v);

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [r, t] = pairs[j];
      if (r == p || r == q || t == p || t == q) continue;
      const std::uint64_t m1 = (1ull << p) | (1ull << q);
      const std::uint64_t m2 = (1ull << r) | (1ull << t);
      const bool fwd = ((h.out_mask(p) | h.out_mask(q)) & m2) != 0;
      const bool bwd = ((h.out_mask(r) | h.out_mask(t)) & m1) != 0;
      if (!(fwd && bwd)) return true;
    }
  }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      if (!((ns[p] >> q) & 1)) continue;
      const std::uint64_t both = ns[p] & ns[q];
      for (int r = q + 1; r < n; ++r)
        if ((both >> r) & 1) return true;  // pairwise non-seeing triple
    }
  return false;
}

bool is_deeply_critical(const OrientedGraph& g) {
  if (g.order() == 0 || g.arc_count() == 0) return false;
  const ChiResult chi = oriented_chromatic_number(g);
  const bool clique_path = is_absolute_clique(g) && chi.chromatic_number == g.order();
  for (Arc a : g.arcs()) {
    const bool drop2 = clique_path
                           ? clique_arc_drop_two(g, a)
                           : find_colouring(remove_arc(g, a), chi.chromatic_number - 2).has_value();
    if (!drop2) return false;
  }
  return true;
}

CriticalityReport criticality_report(const OrientedGraph& g) {
  if (g.order() == 0) fail(errc::empty_graph, "criticality is undefined on the empty graph");
  CriticalityReport rep;
  rep.chi = oriented_chromatic_number(g).chromatic_number;
  rep.deeply_critical = g.arc_count() > 0;
  for (Arc a : g.arcs()) {
    const OrientedGraph h = remove_arc(g, a);
    int chi_without = rep.chi;
    for (int k = std::max(1, rep.chi - 2); k <= rep.chi; ++k) {
      if (find_colouring(h, k)) { chi_without = k; break; }
    }
    rep.per_arc.push_back({a, chi_without, rep.chi - chi_without});
    if (rep.chi - chi_without != 2) rep.deeply_critical = false;
  }
  return rep;
}

}  // namespace oriclique
