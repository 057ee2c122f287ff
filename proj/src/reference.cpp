#include "oriclique/reference.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "oriclique/errors.hpp"

namespace oriclique {

bool reference_valid_colouring(const OrientedGraph& g, std::span<const int> colour) {
  const int n = g.order();
  if (static_cast<int>(colour.size()) != n)
    fail(errc::bad_argument, "colour vector size does not match the order");
  const std::vector<Arc> arcs = g.arcs();
  for (const Arc& a : arcs)
    if (colour[a.tail] == colour[a.head]) return false;
  for (const Arc& a : arcs)
    for (const Arc& b : arcs)
      if (colour[a.tail] == colour[b.head] && colour[a.head] == colour[b.tail]) return false;
  return true;
}

int reference_chi_o(const OrientedGraph& g) {
  const int n = g.order();
  if (n == 0) fail(errc::empty_graph, "chi_o is undefined on the empty graph");
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  int best = n;  // singleton classes are always proper
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      if (mx + 1 < best && reference_valid_colouring(g, colour)) best = mx + 1;
      return;
    }
    for (int c = 0; c <= mx + 1; ++c) {
      colour[static_cast<std::size_t>(i)] = c;
      self(self, i + 1, std::max(mx, c));
    }
  };
  rec(rec, 0, -1);
  return best;
}

std::uint64_t labelled_class_count(int n) {
  if (n < 1 || n > 5) fail(errc::capacity, "labelled census supports orders 1..5");
  std::vector<std::array<int, 5>> perms;
  {
    std::array<int, 5> p{0, 1, 2, 3, 4};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.begin() + n));
  }
  std::uint64_t total = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) total *= 3;

  // dedupe by the minimum row-major matrix string over all n! relabellings;
  // deliberately shares nothing with the refinement-based canonical form
  std::set<std::string> classes;
  for (std::uint64_t code = 0; code < total; ++code) {
    bool adj[5][5] = {};
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, c /= 3) {
        const int s = static_cast<int>(c % 3);
        if (s == 1) adj[i][j] = true;
        else if (s == 2) adj[j][i] = true;
      }
    std::string best;
    std::string cur(static_cast<std::size_t>(n * n), '0');
    for (const auto& p : perms) {
      std::fill(cur.begin(), cur.end(), '0');
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (adj[i][j]) cur[static_cast<std::size_t>(p[i] * n + p[j])] = '1';
      if (best.empty() || cur < best) best = cur;
    }
    classes.insert(best);
  }
  return static_cast<std::uint64_t>(classes.size());
}

}  // namespace oriclique
