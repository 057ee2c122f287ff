#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "oriclique/circulant.hpp"
#include "oriclique/colouring.hpp"

using namespace oriclique;

TEST_CASE("connection set validation") {
  CHECK_NOTHROW(validate({5, {1}}));
  CHECK_NOTHROW(validate({9, {1, 2, 3}}));
  CHECK_NOTHROW(validate({1, {}}));
  CHECK_THROWS_WITH_AS(validate({0, {}}), doctest::Contains("BadConnectionSet"), Error);
  CHECK_THROWS_WITH_AS(validate({5, {0}}), doctest::Contains("BadConnectionSet"), Error);
  CHECK_THROWS_WITH_AS(validate({5, {5}}), doctest::Contains("BadConnectionSet"), Error);
  CHECK_THROWS_WITH_AS(validate({5, {2, 1}}), doctest::Contains("BadConnectionSet"), Error);
  CHECK_THROWS_WITH_AS(validate({5, {1, 1}}), doctest::Contains("BadConnectionSet"), Error);
  CHECK_THROWS_WITH_AS(validate({6, {3}}), doctest::Contains("BadConnectionSet"), Error);
  CHECK_THROWS_WITH_AS(validate({5, {1, 4}}), doctest::Contains("BadConnectionSet"), Error);
}

TEST_CASE("build_circulant") {
  CHECK(build_circulant({5, {1}}) ==
        OrientedGraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  CHECK(build_circulant({1, {}}) == OrientedGraph::build(1, {}));
  CHECK(build_circulant({7, {1, 2, 3}}).arc_count() == 21);
  CHECK_THROWS_WITH_AS(build_circulant({65, {1}}), doctest::Contains("Capacity"), Error);
}

TEST_CASE("arithmetic conditions on known sets") {
  CHECK(arithmetic_dcoc_check({5, {1}}));
  CHECK(arithmetic_dcoc_check({5, {4}}));
  CHECK(arithmetic_dcoc_check({9, {1, 2, 5}}) ==
        (is_absolute_clique(build_circulant({9, {1, 2, 5}})) &&
         is_deeply_critical(build_circulant({9, {1, 2, 5}}))));

  const ArithmeticDiagnosis two_reps = arithmetic_conditions({7, {1, 2}});
  CHECK_FALSE(two_reps.unique);  // 2 = 1+1 = 0+2
  CHECK(two_reps.witness_k == 2);

  const ArithmeticDiagnosis no_cover = arithmetic_conditions({6, {1}});
  CHECK(no_cover.cover == false);
  CHECK(no_cover.witness_k == 3);
  CHECK(no_cover.unique);

  const ArithmeticDiagnosis empty = arithmetic_conditions({5, {}});
  CHECK_FALSE(empty.ok());  // arcless circulants are never deeply critical

  // negated tournament set: passes only under the mod-n reading of the
  // doubling condition, and the definitional check agrees it must fail
  CHECK_FALSE(arithmetic_dcoc_check({7, {4, 5, 6}}));
  CHECK_FALSE(is_deeply_critical(build_circulant({7, {4, 5, 6}})));
}

TEST_CASE("multiplier classes") {
  CHECK(multiplier_canonical({5, {4}}) == std::vector<int>{1});
  CHECK(multiplier_canonical({5, {2}}) == std::vector<int>{1});
  CHECK(multiplier_class_size({5, {1}}) == 4);
  // images of {1,2,5} under the units of Z_9: minimum is 2*{1,2,5} = {1,2,4}
  CHECK(multiplier_canonical({9, {1, 2, 5}}) == std::vector<int>{1, 2, 4});
  CHECK(multiplier_class_size({9, {1, 2, 5}}) == 6);
  CHECK(multiplier_class_size({1, {}}) == 1);
  CHECK(multiplier_canonical({12, {1, 2}}) == std::vector<int>{1, 2});
}

TEST_CASE("scan finds the directed five-cycle family") {
  const CirculantScanResult r = scan_circulants(5);
  CHECK(r.found == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
  REQUIRE(r.classes.size() == 1);
  CHECK(r.classes[0].set == std::vector<int>{1});
  CHECK(r.classes[0].class_size == 4);
  CHECK(r.completed);
  CHECK_FALSE(r.resumed);
}

TEST_CASE("scan modes agree and exhaustive counts leaves exactly") {
  for (int n : {7, 9, 11, 13}) {
    CirculantScanOptions ex;
    ex.mode = ScanMode::exhaustive;
    const CirculantScanResult a = scan_circulants(n, ex);
    const CirculantScanResult b = scan_circulants(n);
    CHECK(a.found == b.found);
    std::uint64_t expect = 1;
    for (int i = 0; i < (n - 1) / 2; ++i) expect *= 3;
    CHECK(a.leaves == expect);
    CHECK(b.leaves <= a.leaves);
  }
  CHECK(scan_circulants(7).found.empty());  // no order-7 circulant qualifies
  CHECK_THROWS_WITH_AS(scan_circulants(0), doctest::Contains("BadArgument"), Error);
}

TEST_CASE("every found set passes the definitional check") {
  for (int n : {5, 9, 11, 13, 15}) {
    const CirculantScanResult r = scan_circulants(n);
    for (const auto& s : r.found) {
      const OrientedGraph g = build_circulant({n, s});
      CHECK(is_absolute_clique(g));
      CHECK(is_deeply_critical(g));
    }
    std::size_t class_members = 0;
    for (const auto& c : r.classes) class_members += static_cast<std::size_t>(c.class_size);
    CHECK(class_members == r.found.size());  // classes tile the finds
  }
}

TEST_CASE("scan is deterministic across worker counts") {
  CirculantScanOptions serial;
  serial.jobs = 1;
  CirculantScanOptions wide;
  wide.jobs = 4;
  const CirculantScanResult a = scan_circulants(13, serial);
  const CirculantScanResult b = scan_circulants(13, wide);
  CHECK(a.found == b.found);
  CHECK(a.leaves == b.leaves);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("scan checkpointing resumes to the same answer") {
  const std::string path = "test-circulant-13.ckpt";
  std::filesystem::remove(path);

  CirculantScanOptions limited;
  limited.checkpoint_path = path;
  limited.limit_chunks = 3;
  const CirculantScanResult partial = scan_circulants(13, limited);
  CHECK_FALSE(partial.completed);
  CHECK(std::filesystem::exists(path));

  CirculantScanOptions resume;
  resume.checkpoint_path = path;
  const CirculantScanResult resumed = scan_circulants(13, resume);
  CHECK(resumed.completed);
  CHECK(resumed.resumed);
  CHECK_FALSE(std::filesystem::exists(path));  // removed on completion

  const CirculantScanResult fresh = scan_circulants(13);
  CHECK(resumed.found == fresh.found);
  CHECK(resumed.leaves == fresh.leaves);
  CHECK(resumed.nodes == fresh.nodes);
}

TEST_CASE("even orders never qualify") {
  CHECK(verify_no_even_circulant_dcoc(16));
  for (int n : {4, 6, 8, 10, 12}) CHECK(scan_circulants(n).found.empty());
}
