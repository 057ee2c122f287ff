#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oriclique/canonical.hpp"
#include "oriclique/extension.hpp"
#include "oriclique/graph.hpp"

using namespace oriclique;

namespace {

OrientedGraph random_graph(int n, std::mt19937_64& rng) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      switch (rng() % 3) {
        case 1: arcs.push_back({i, j}); break;
        case 2: arcs.push_back({j, i}); break;
        default: break;
      }
    }
  return OrientedGraph::build(n, arcs);
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("canonical code is invariant under relabelling") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 8) + 1;
    const OrientedGraph g = random_graph(n, rng);
    const OrientedGraph h = permuted(g, random_perm(n, rng));
    CHECK(canonical_code(g) == canonical_code(h));
  }
}

TEST_CASE("canonical code separates the order-4 classes") {
  // all 3^6 labelled graphs on 4 vertices fall into exactly 42 classes
  std::set<std::string> codes;
  for (int code = 0; code < 729; ++code) {
    std::vector<Arc> arcs;
    int c = code;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j, c /= 3) {
        if (c % 3 == 1) arcs.push_back({i, j});
        else if (c % 3 == 2) arcs.push_back({j, i});
      }
    codes.insert(canonical_code(OrientedGraph::build(4, arcs)).bytes);
  }
  CHECK(codes.size() == 42);
}

TEST_CASE("to_canonical maps onto the canonical representative") {
  std::mt19937_64 rng(999);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng() % 7) + 1;
    const OrientedGraph g = random_graph(n, rng);
    const CanonicalForm f = canonical_form(g);
    // to_canonical must be a permutation
    std::set<int> image(f.to_canonical.begin(), f.to_canonical.end());
    CHECK(static_cast<int>(image.size()) == n);
    // relabelling by it reproduces the same code, i.e. it lands on the
    // canonical representative
    const OrientedGraph rep = permuted(g, f.to_canonical);
    CHECK(canonical_code(rep) == f.code);
  }
}

TEST_CASE("canonical capacity and trivial orders") {
  CHECK_THROWS_WITH_AS(canonical_code(OrientedGraph::build(13, {})),
                       doctest::Contains("Capacity"), Error);
  CHECK(canonical_code(OrientedGraph::build(0, {})).bytes.size() == 1);
  CHECK(canonical_code(OrientedGraph::build(1, {})).bytes[0] == 1);
  CHECK(canonical_code(OrientedGraph::build(12, {})).bytes ==
        canonical_code(OrientedGraph::build(12, {})).bytes);
}

TEST_CASE("distinct classes get distinct codes at order 9") {
  const OrientedGraph g = dcoc_order9();
  const OrientedGraph h = remove_arc(g, {5, 8});
  CHECK(canonical_code(g) != canonical_code(h));
  CHECK(canonical_code(g).hex().size() == 2 * canonical_code(g).bytes.size());
}
