#include <doctest.h>

#include "cckit/crossing.hpp"
#include "cckit/generators.hpp"
#include "cckit/planarity.hpp"
#include "cckit/tile.hpp"
#include "cckit/verify.hpp"

using namespace cckit;

TEST_CASE("crossing oracle on small graphs") {
  Multigraph c4;
  for (auto s : {"a", "b", "c", "d"}) c4.add_vertex(s);
  c4.add_edge("a", "b");
  c4.add_edge("b", "c");
  c4.add_edge("c", "d");
  c4.add_edge("d", "a");
  auto r = crossing_number_exact(c4, 2);
  REQUIRE(r.value);
  CHECK(*r.value == 0);

  auto k33r = crossing_number_exact(k33(), 2);
  REQUIRE(k33r.value);
  CHECK(*k33r.value == 1);
  REQUIRE(k33r.witness);
  CHECK(k33r.witness->weight == 1);
}

TEST_CASE("crossing bundles cost the product of multiplicities") {
  Multigraph g = k33();
  g.add_edge(0, 3);  // doubles one bundle
  auto r = crossing_number_exact(g, 3);
  REQUIRE(r.value);
  CHECK(*r.value == 1);  // a drawing can still avoid the doubled edge
}

TEST_CASE("oracle reports unknown when the budget runs out") {
  auto r = cr_leq(staircase_strip(3, 3), 1, 5);
  CHECK(r.verdict == Verdict::unknown);
  auto c = crossing_number_exact(staircase_strip(3, 3), 2, 5);
  CHECK(c.budget_exceeded);
  CHECK_FALSE(c.value);
}

TEST_CASE("criticality: deleting an edge of K33 makes it planar") {
  auto c = is_k_crossing_critical(k33(), 1);
  CHECK(c.verdict == Verdict::yes);
  auto d = is_k_crossing_critical(k33(), 2);
  CHECK(d.verdict == Verdict::no);
  CHECK(d.lower_bound_failed);
}

TEST_CASE("tile crossing number of the staircase tile is zero, twisted joins cost") {
  auto t = tile_crossing_number(staircase_tile(3), 2);
  REQUIRE(t.value);
  CHECK(*t.value == 0);
  auto tw = tile_crossing_number(invert_right(staircase_tile(3)), 2);
  REQUIRE(tw.value);
  // Twisted S_3 has C(3,2) - 1 = 2 pairwise twisted, edge-disjoint path pairs.
  CHECK(*tw.value == 2);
}

TEST_CASE("perfectness report") {
  auto p = is_perfect(staircase_tile(4));
  CHECK(p.perfect());
  CHECK(p.witnesses.empty());
  CHECK(p.disjoint_pairs_strict == std::optional<bool>(true));
  Multigraph g;
  for (auto s : {"a", "b", "c"}) g.add_vertex(s);
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  auto q = is_perfect(Tile::from_labels(g, {"a"}, {"b", "c"}));
  CHECK_FALSE(q.perfect());
  CHECK_FALSE(q.equal_walls);
}

TEST_CASE("certificate errors name the offending pair") {
  auto ps = path_system(1, 3, 3);
  auto pairs = ps.all_pairs();
  CHECK(verify_twisted_family(ps.tile, ps.paths, pairs) == 1 + 2 * 2);
  // Listing a pair twice is rejected.
  auto dup = pairs;
  dup.push_back(dup.front());
  CHECK_THROWS_AS(verify_twisted_family(ps.tile, ps.paths, dup), CertificateError);
  // A truncated path no longer reaches the right wall.
  auto broken = ps.paths;
  broken[pairs.front().first].vertices.pop_back();
  CHECK_THROWS_AS(verify_twisted_family(ps.tile, broken, pairs), CertificateError);
}

TEST_CASE("three-connectivity") {
  CHECK(is_three_connected(k33()));
  CHECK(is_three_connected(staircase_strip(3, 3)));
  Multigraph c4;
  for (auto s : {"a", "b", "c", "d"}) c4.add_vertex(s);
  c4.add_edge("a", "b");
  c4.add_edge("b", "c");
  c4.add_edge("c", "d");
  c4.add_edge("d", "a");
  CHECK_FALSE(is_three_connected(c4));
}
