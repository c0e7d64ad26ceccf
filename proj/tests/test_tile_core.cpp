#include <doctest.h>

#include "cckit/generators.hpp"
#include "cckit/isomorphism.hpp"
#include "cckit/multigraph.hpp"
#include "cckit/rational.hpp"
#include "cckit/tile.hpp"

using namespace cckit;

namespace {

// Path a - x - b as a tile with walls {a} and {b}.
Tile path_tile(const std::string& p) {
  Multigraph g;
  g.add_vertex(p + "a");
  g.add_vertex(p + "x");
  g.add_vertex(p + "b");
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return Tile(g, {0}, {2});
}

// Two-wall "ladder rung": left {a1,a2}, right {b1,b2}, edges a_i b_i and a1 a2.
Tile rung() {
  Multigraph g;
  for (auto s : {"a1", "a2", "b1", "b2"}) g.add_vertex(s);
  g.add_edge("a1", "b1");
  g.add_edge("a2", "b2");
  g.add_edge("a1", "a2");
  return Tile::from_labels(g, {"a1", "a2"}, {"b1", "b2"});
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational::parse("672/192") == Rational(7, 2));
  CHECK(Rational::parse("4") == Rational(4));
  CHECK(Rational(16, 5) < Rational(7, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("multigraph keeps multiplicities and degrees") {
  Multigraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("a", "b", 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.bundle_count() == 1);
  CHECK(g.degree(0) == 2);
  CHECK_FALSE(g.is_simple());
  g.remove_edge(0, 1);
  CHECK(g.is_simple());
  CHECK_THROWS_AS(g.add_edge("a", "a"), InvalidInput);
  CHECK_THROWS_AS(g.add_vertex("a"), InvalidInput);
}

TEST_CASE("tile walls must be distinct and disjoint") {
  Multigraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  CHECK_THROWS_AS(Tile(g, {0, 0}, {1}), InvalidInput);
  CHECK_THROWS_AS(Tile(g, {0}, {0}), InvalidInput);
}

TEST_CASE("join suppresses only the newly identified degree-2 vertices") {
  Tile a = path_tile("p");
  Tile b = path_tile("q");
  Tile j = join(a, b);
  // a-x-[b=a']-x'-b' : the seam vertex has degree 2 and is suppressed; x, x' stay.
  CHECK(j.graph().vertex_count() == 4);
  CHECK(j.graph().edge_count() == 3);
  DegreeHistogram h = degree_histogram(j.graph());
  CHECK(h.count(1) == 2);
  CHECK(h.count(2) == 2);
}

TEST_CASE("join of rungs keeps a ladder") {
  Tile r = rung();
  Tile j = join(r, r);
  // Seam vertices get degree 3 (two rung edges and the second rung's a1a2): no suppression.
  CHECK(j.graph().vertex_count() == 6);
  CHECK(j.graph().edge_count() == 6);
}

TEST_CASE("inversions and reversal are involutions") {
  for (int n = 3; n <= 5; ++n) {
    Tile s = staircase_tile(n);
    CHECK(invert(invert(s)) == s);
    CHECK(reverse(reverse(s)) == s);
    CHECK(invert_left(invert_left(s)) == s);
    CHECK(invert_right(invert_right(s)) == s);
    CHECK(invert(s) == invert_left(invert_right(s)));
  }
}

TEST_CASE("cut rotates and rejects bad indices") {
  TileSequence seq{path_tile("a"), path_tile("b"), path_tile("c")};
  TileSequence c = cut(seq, 1);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == seq[2]);
  CHECK(c[1] == seq[0]);
  CHECK_THROWS_AS(cut(seq, 3), InvalidInput);
}

TEST_CASE("cyclize of a rung sequence is a prism") {
  Tile r = rung();
  TileSequence seq{r, r, r};
  Multigraph g = cyclize(seq);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 9);
  DegreeHistogram h = degree_histogram(g);
  CHECK(h.count(3) == 6);
}

TEST_CASE("zip counts vertices and edges") {
  Multigraph a = k33();
  Multigraph b = k33();
  REQUIRE(zippable(a, 0));
  Multigraph z = zip(a, 0, b, 0);
  CHECK(z.vertex_count() == 10);
  CHECK(z.edge_count() == 15);
  Multigraph bad;
  bad.add_vertex("x");
  CHECK_THROWS_AS(zip(a, 0, bad, 0), InvalidInput);
}

TEST_CASE("suppression is idempotent and never creates loops") {
  Multigraph g;
  for (auto s : {"a", "b", "c"}) g.add_vertex(s);
  g.add_edge("a", "b", 2);
  g.add_edge("b", "c");
  Multigraph once = suppress_degree_two(g);
  CHECK(suppress_degree_two(once) == once);
  Multigraph s = suppress_degree_two(staircase_strip(3, 3));
  CHECK(suppress_degree_two(s) == s);
}

TEST_CASE("isomorphism respects multiplicities and wall order") {
  CHECK(isomorphic(k33(), k33()));
  CHECK_FALSE(isomorphic(k33(), k5()));
  Tile s = staircase_tile(4);
  CHECK(tile_isomorphic(s, s));
  CHECK(tile_isomorphic(invert(invert(s)), s));
  Tile inv = invert_right(s);
  CHECK_FALSE(tile_isomorphic(inv, s));
}
