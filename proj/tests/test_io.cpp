#include "doctest.h"
#include "oriclique/extension.hpp"
#include "oriclique/io.hpp"

using namespace oriclique;

TEST_CASE("ograph round trip") {
  const OrientedGraph g = dcoc_order9();
  const std::string text = format_ograph(g);
  CHECK(text.substr(0, 5) == "9 15\n");
  CHECK(parse_ograph(text) == g);
}

TEST_CASE("ograph accepts arcs in any order and extra whitespace") {
  CHECK(parse_ograph("3 2\n1 2\n0 1\n") == OrientedGraph::build(3, {{0, 1}, {1, 2}}));
  CHECK(parse_ograph("  3   2 \n\n 0 1\n 1 2 \n\n") ==
        OrientedGraph::build(3, {{0, 1}, {1, 2}}));
  CHECK(parse_ograph("2 0") == OrientedGraph::build(2, {}));
}

TEST_CASE("ograph rejects malformed input") {
  CHECK_THROWS_WITH_AS(parse_ograph(""), doctest::Contains("BadFormat"), Error);
  CHECK_THROWS_WITH_AS(parse_ograph("3"), doctest::Contains("BadFormat"), Error);
  CHECK_THROWS_WITH_AS(parse_ograph("3 2\n0 1\n"), doctest::Contains("BadFormat"), Error);
  CHECK_THROWS_WITH_AS(parse_ograph("3 1\n0 1\n9 9\n"), doctest::Contains("BadFormat"), Error);
  CHECK_THROWS_WITH_AS(parse_ograph("3 x\n"), doctest::Contains("BadFormat"), Error);
  CHECK_THROWS_WITH_AS(parse_ograph("70 0\n"), doctest::Contains("BadFormat"), Error);
  CHECK_THROWS_WITH_AS(parse_ograph("-1 0\n"), doctest::Contains("BadFormat"), Error);
  CHECK_THROWS_WITH_AS(parse_ograph("2 1\n0 0\n"), doctest::Contains("SelfLoop"), Error);
  CHECK_THROWS_WITH_AS(parse_ograph("2 2\n0 1\n1 0\n"), doctest::Contains("Antisymmetry"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_ograph("2 2\n0 1\n0 1\n"), doctest::Contains("DuplicateArc"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_ograph("2 1\n0 3\n"), doctest::Contains("OutOfRange"), Error);
}

TEST_CASE("compact round trip") {
  const OrientedGraph g = dcoc_order9();
  CHECK(parse_compact(format_compact(g)) == g);
  CHECK(format_compact(OrientedGraph::build(3, {{1, 2}, {0, 1}})) == "3:0>1,1>2");
  CHECK(parse_compact("5:") == OrientedGraph::build(5, {}));
  CHECK(parse_compact(" 2:0>1 \n") == OrientedGraph::build(2, {{0, 1}}));
  CHECK(format_compact(OrientedGraph::build(0, {})) == "0:");
}

TEST_CASE("compact rejects malformed input") {
  CHECK_THROWS_WITH_AS(parse_compact("0>1,1>2"), doctest::Contains("BadFormat"), Error);
  CHECK_THROWS_WITH_AS(parse_compact("3:0-1"), doctest::Contains("BadFormat"), Error);
  CHECK_THROWS_WITH_AS(parse_compact("3:0>1,"), doctest::Contains("BadFormat"), Error);
  CHECK_THROWS_WITH_AS(parse_compact("x:0>1"), doctest::Contains("BadFormat"), Error);
  CHECK_THROWS_WITH_AS(parse_compact("3:0>q"), doctest::Contains("BadFormat"), Error);
}

TEST_CASE("parse_graph auto-detects the form") {
  const OrientedGraph g = OrientedGraph::build(3, {{0, 1}, {1, 2}});
  CHECK(parse_graph("3:0>1,1>2") == g);
  CHECK(parse_graph("3 2\n0 1\n1 2\n") == g);
}

TEST_CASE("json emitters carry the headline fields") {
  const OrientedGraph g = OrientedGraph::build(2, {{0, 1}});
  const nlohmann::json j = graph_json(g);
  CHECK(j["order"] == 2);
  CHECK(j["arc_count"] == 1);
  CHECK(j["compact"] == "2:0>1");
  CHECK(j["arcs"][0] == nlohmann::json({0, 1}));
}
