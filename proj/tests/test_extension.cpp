#include "doctest.h"
#include "oriclique/canonical.hpp"
#include "oriclique/colouring.hpp"
#include "oriclique/extension.hpp"

using namespace oriclique;

namespace {

OrientedGraph c3() { return OrientedGraph::build(3, {{0, 1}, {1, 2}, {2, 0}}); }
OrientedGraph c5() {
  return OrientedGraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}
bool is_dcoc(const OrientedGraph& g) {
  return is_absolute_clique(g) && is_deeply_critical(g);
}

}  // namespace

TEST_CASE("partition checking") {
  const OrientedGraph g = dcoc_order9();
  CHECK(check_extending_partition(g, dcoc_order9_partition()).ok());
  CHECK(is_extending_partition(g, dcoc_order9_partition()));

  CHECK_THROWS_WITH_AS(check_extending_partition(g, {{0, 1}, {1, 2}, {3, 4, 5, 6, 7, 8}}),
                       doctest::Contains("BadPartition"), Error);  // overlap
  CHECK_THROWS_WITH_AS(check_extending_partition(g, {{0}, {1}, {2}}),
                       doctest::Contains("BadPartition"), Error);  // missing vertices
  CHECK_THROWS_WITH_AS(check_extending_partition(g, {{0, 9}, {1}, {2}}),
                       doctest::Contains("BadPartition"), Error);  // out of range

  // the conditions are cyclic: rotating the parts keeps them extending
  const ExtendingPartition rot{{0, 1, 5}, {3, 4, 8}, {2, 6, 7}};
  CHECK(check_extending_partition(g, rot).ok());
  // swapping two parts reverses the required arc direction and fails (i)
  const ExtendingPartition swp{{0, 1, 5}, {2, 6, 7}, {3, 4, 8}};
  const PartitionDiagnosis d = check_extending_partition(g, swp);
  CHECK_FALSE(d.forward_only);
  CHECK_FALSE(d.ok());
}

TEST_CASE("condition flags are reported separately") {
  // single arc 0->1 with parts {0},{1},{2}: condition (i) holds, (ii) fails
  // for u=1 (X2 has no private successor in X3)
  const OrientedGraph g = OrientedGraph::build(3, {{0, 1}});
  const PartitionDiagnosis d = check_extending_partition(g, {{0}, {1}, {2}});
  CHECK(d.forward_only);
  CHECK_FALSE(d.ok());
}

TEST_CASE("find_extending_partition returns the least assignment") {
  const auto p = find_extending_partition(c3());
  REQUIRE(p.has_value());
  CHECK(p->x1 == std::vector<int>{0});
  CHECK(p->x2 == std::vector<int>{1});
  CHECK(p->x3 == std::vector<int>{2});
  CHECK(is_extending_partition(c3(), *p));

  // directed C5 must not be extendable: a 2-extension would be an order-7
  // deeply critical clique
  CHECK_FALSE(find_extending_partition(c5()).has_value());

  const auto p9 = find_extending_partition(dcoc_order9());
  REQUIRE(p9.has_value());
  CHECK(is_extending_partition(dcoc_order9(), *p9));
}

TEST_CASE("six-extension wiring") {
  const SixExtension six = six_extension(c3(), {{0}, {1}, {2}});
  const OrientedGraph& g = six.graph;
  CHECK(g.order() == 9);
  CHECK(g.arc_count() == 15);
  // hub arcs: x1-=3 x1+=4 x2-=5 x2+=6 x3-=7 x3+=8
  CHECK(g.has_arc(3, 6));  // x1- -> x2+
  CHECK(g.has_arc(4, 5));  // x1+ -> x2-
  CHECK(g.has_arc(5, 8));  // x2- -> x3+
  CHECK(g.has_arc(6, 7));  // x2+ -> x3-
  CHECK(g.has_arc(7, 4));  // x3- -> x1+
  CHECK(g.has_arc(8, 3));  // x3+ -> x1-
  // attachments around X1 = {0}
  CHECK(g.has_arc(3, 0));
  CHECK(g.has_arc(0, 4));
  CHECK(six.partition.x1 == std::vector<int>{0, 3, 4});
  CHECK(six.partition.x2 == std::vector<int>{1, 5, 6});
  CHECK(six.partition.x3 == std::vector<int>{2, 7, 8});
  CHECK(is_extending_partition(g, six.partition));
}

TEST_CASE("six-extension of the triangle is the embedded order-9 graph") {
  const SixExtension six = six_extension(c3(), {{0}, {1}, {2}});
  CHECK(canonical_code(six.graph) == canonical_code(dcoc_order9()));
  CHECK(is_dcoc(six.graph));
}

TEST_CASE("four- and two-extensions are induced subgraphs of the six") {
  const OrientedGraph base = dcoc_order9();
  const ExtendingPartition p = dcoc_order9_partition();
  const SixExtension six = six_extension(base, p);
  const OrientedGraph four = four_extension(base, p);
  const OrientedGraph two = two_extension(base, p);
  CHECK(six.graph.order() == 15);
  CHECK(four.order() == 13);
  CHECK(two.order() == 11);
  // four: drop x1+ (10) and x2- (11); two: drop x1- (9), x2+ (12), x3- (13), x3+ (14)
  CHECK(four == induced_subgraph(six.graph, six.graph.vertex_mask() &
                                                ~((1ull << 10) | (1ull << 11))));
  CHECK(two == induced_subgraph(six.graph,
                                six.graph.vertex_mask() &
                                    ~((1ull << 9) | (1ull << 12) | (1ull << 13) | (1ull << 14))));
  CHECK(is_dcoc(six.graph));
  CHECK(is_dcoc(four));
  CHECK(is_dcoc(two));
}

TEST_CASE("extension requires an extending partition") {
  CHECK_THROWS_WITH_AS(six_extension(c3(), {{1}, {0}, {2}}),
                       doctest::Contains("NotExtending"), Error);
  CHECK_THROWS_WITH_AS(four_extension(c3(), {{1}, {0}, {2}}),
                       doctest::Contains("NotExtending"), Error);
  CHECK_THROWS_WITH_AS(two_extension(c3(), {{1}, {0}, {2}}),
                       doctest::Contains("NotExtending"), Error);
  CHECK_THROWS_WITH_AS(six_extension(c3(), {{0}, {1}, {}}),
                       doctest::Contains("BadPartition"), Error);
}

TEST_CASE("embedded order-9 graph is the advertised constant") {
  const OrientedGraph g = dcoc_order9();
  CHECK(g.order() == 9);
  CHECK(g.arc_count() == 15);
  CHECK(is_dcoc(g));
  CHECK(oriented_chromatic_number(g).chromatic_number == 9);
}

TEST_CASE("generate_odd_dcoc covers the achievable orders") {
  for (int n : {1, 3, 7})
    CHECK_THROWS_WITH_AS(generate_odd_dcoc(n), doctest::Contains("NoSuchOrder"), Error);
  for (int n : {0, 2, 4, 10})
    CHECK_THROWS_WITH_AS(generate_odd_dcoc(n), doctest::Contains("EvenOrder"), Error);
  CHECK_THROWS_WITH_AS(generate_odd_dcoc(65), doctest::Contains("Capacity"), Error);
  CHECK_THROWS_WITH_AS(generate_odd_dcoc(-3), doctest::Contains("NoSuchOrder"), Error);

  for (int n = 5; n <= 21; n += 2) {
    if (n == 7) continue;
    const OrientedGraph g = generate_odd_dcoc(n);
    CHECK(g.order() == n);
    CHECK(is_dcoc(g));
  }
  CHECK(generate_odd_dcoc(5) == c5());
  CHECK(generate_odd_dcoc(9) == dcoc_order9());
  CHECK(generate_odd_dcoc(11) == two_extension(dcoc_order9(), dcoc_order9_partition()));
  CHECK(generate_odd_dcoc(13) == four_extension(dcoc_order9(), dcoc_order9_partition()));
}
