#include "oriclique/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace oriclique {

namespace {

constexpr int kCap = kCanonicalCapacity;
constexpr int kWords = (kCap * kCap + 63) / 64;

using Bits = std::array<std::uint64_t, kWords>;  // matrix string, MSB-first per word

// Iterated (out-degree, in-degree) refinement. Colour ids are ranks of the
// sorted invariant signatures, so corresponding vertices of isomorphic
// graphs always land in corresponding classes. Restricting the canonical
// search to orders that respect these classes keeps "equal codes iff
// isomorphic": the restriction is itself isomorphism-invariant.
struct Refinement {
  std::array<int, kCap> colour{};
  int classes = 1;
};

Refinement refine(const OrientedGraph& g) {
  const int n = g.order();
  Refinement r;
  std::array<std::vector<int>, kCap> sig;
  for (int v = 0; v < n; ++v)
    sig[v] = {std::popcount(g.out_mask(v)), std::popcount(g.in_mask(v))};
  int prev = 0;
  for (int round = 0; round <= n; ++round) {
    std::array<const std::vector<int>*, kCap> order;
    for (int v = 0; v < n; ++v) order[v] = &sig[v];
    std::array<int, kCap> idx{};
    for (int v = 0; v < n; ++v) idx[v] = v;
    std::sort(idx.begin(), idx.begin() + n,
              [&](int a, int b) { return *order[a] < *order[b]; });
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && *order[idx[i]] != *order[idx[i - 1]]) ++c;
      r.colour[idx[i]] = c;
    }
    r.classes = n ? c + 1 : 0;
    if (r.classes == prev || r.classes == n) break;
    prev = r.classes;
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{r.colour[v]};
      std::vector<int> outc, inc;
      std::uint64_t row = g.out_mask(v);
      while (row) { outc.push_back(r.colour[std::countr_zero(row)]); row &= row - 1; }
      row = g.in_mask(v);
      while (row) { inc.push_back(r.colour[std::countr_zero(row)]); row &= row - 1; }
      std::sort(outc.begin(), outc.end());
      std::sort(inc.begin(), inc.end());
      s.push_back(-1);
      s.insert(s.end(), outc.begin(), outc.end());
      s.push_back(-1);
      s.insert(s.end(), inc.begin(), inc.end());
      sig[v] = std::move(s);
    }
  }
  return r;
}

struct Searcher {
  int n = 0;
  std::array<std::uint64_t, kCap> out{};
  std::array<std::uint64_t, kCap> twin{};           // swap-automorphic partners
  std::array<int, kCap> pos_colour{};               // class required at each position
  std::array<std::array<int, kCap>, kCap> members{};  // vertices per class
  std::array<int, kCap> member_count{};

  std::array<int, kCap> cur{};
  std::array<bool, kCap> used{};
  bool have_best = false;
  Bits best{};
  std::array<int, kCap> best_cur{};

  bool arc(int u, int v) const { return (out[u] >> v) & 1; }
  bool best_bit(int idx) const { return (best[idx >> 6] >> (63 - (idx & 63))) & 1; }

  // Compare the partially known matrix against the incumbent in row-major
  // order. Cells with an unassigned coordinate are optimistic: if the
  // incumbent has a 1 there the branch might still win, so never prune on
  // them; a 0 keeps the tie alive. Prune only when a known cell is 1 where
  // the incumbent, with everything earlier tied, has 0.
  bool prunable(int filled) const {
    int idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j, ++idx) {
        const bool b = best_bit(idx);
        if (i >= filled || j >= filled) {
          if (b) return false;
          continue;
        }
        const bool c = arc(cur[i], cur[j]);
        if (c != b) return c;  // c=1,b=0: strictly worse; c=0,b=1: maybe better
      }
    return false;
  }

  Bits current_bits() const {
    Bits bits{};
    int idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j, ++idx)
        if (arc(cur[i], cur[j])) bits[idx >> 6] |= 1ull << (63 - (idx & 63));
    return bits;
  }

  void leaf() {
    Bits bits = current_bits();
    if (!have_best || bits < best) {
      best = bits;
      best_cur = cur;
      have_best = true;
    }
  }

  void rec(int p) {
    if (p == n) { leaf(); return; }
    const int c = pos_colour[p];
    std::uint64_t tried = 0;
    for (int i = 0; i < member_count[c]; ++i) {
      const int v = members[c][i];
      if (used[v]) continue;
      // If the transposition (u v) is an automorphism for some u already
      // tried at this node, v's subtree repeats u's codes bit for bit.
      if (twin[v] & tried) continue;
      tried |= 1ull << v;
      cur[p] = v;
      used[v] = true;
      if (!have_best || !prunable(p + 1)) rec(p + 1);
      used[v] = false;
    }
  }
};

}  // namespace

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

CanonicalForm canonical_form(const OrientedGraph& g) {
  const int n = g.order();
  if (n > kCap)
    fail(errc::capacity, "canonical labelling supports order <= " + std::to_string(kCap));
  CanonicalForm res;
  res.to_canonical.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) {
    res.code.bytes.assign(1, '\0');
    return res;
  }

  Refinement r = refine(g);
  Searcher s;
  s.n = n;
  for (int v = 0; v < n; ++v) s.out[v] = g.out_mask(v);
  // twins: non-adjacent vertices with identical rows elsewhere, i.e. swapping
  // them is an automorphism (kills the factorial blowup on regular graphs)
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const std::uint64_t t = ~((1ull << u) | (1ull << v));
      if (!g.adjacent(u, v) && (g.out_mask(u) & t) == (g.out_mask(v) & t) &&
          (g.in_mask(u) & t) == (g.in_mask(v) & t)) {
        s.twin[u] |= 1ull << v;
        s.twin[v] |= 1ull << u;
      }
    }
  for (int v = 0; v < n; ++v) s.members[r.colour[v]][s.member_count[r.colour[v]]++] = v;
  {
    int p = 0;
    for (int c = 0; c < r.classes; ++c)
      for (int i = 0; i < s.member_count[c]; ++i) s.pos_colour[p++] = c;
  }

  if (r.classes == n) {
    // discrete partition: a single admissible order
    int p = 0;
    for (int c = 0; c < n; ++c) s.cur[p++] = s.members[c][0];
    s.leaf();
  } else {
    s.rec(0);
  }

  const int nbytes = (n * n + 7) / 8;
  res.code.bytes.assign(static_cast<std::size_t>(nbytes) + 1, '\0');
  res.code.bytes[0] = static_cast<char>(n);
  for (int idx = 0; idx < n * n; ++idx)
    if (s.best_bit(idx))
      res.code.bytes[1 + (idx >> 3)] |= static_cast<char>(0x80u >> (idx & 7));
  for (int p = 0; p < n; ++p) res.to_canonical[s.best_cur[p]] = p;
  return res;
}

CanonicalCode canonical_code(const OrientedGraph& g) { return canonical_form(g).code; }

}  // namespace oriclique
