#include <doctest.h>

#include "cckit/generators.hpp"
#include "cckit/graph_io.hpp"
#include "cckit/tile.hpp"

using namespace cckit;

TEST_CASE("graph6 of small known graphs") {
  Multigraph k3;
  for (auto s : {"0", "1", "2"}) k3.add_vertex(s);
  k3.add_edge("0", "1");
  k3.add_edge("0", "2");
  k3.add_edge("1", "2");
  CHECK(to_graph6(k3) == "Bw");
  Multigraph empty4;
  for (auto s : {"0", "1", "2", "3"}) empty4.add_vertex(s);
  CHECK(to_graph6(empty4) == "C?");
}

TEST_CASE("graph6 round trip") {
  for (const Multigraph& g : {k33(), k5(), staircase_strip(3, 3), g_graph(1, 3, 3)}) {
    Multigraph back = from_graph6(to_graph6(g));
    REQUIRE(back.vertex_count() == g.vertex_count());
    for (const auto& e : g.bundles()) CHECK(back.multiplicity(e.u, e.v) == e.multiplicity);
    CHECK(back.edge_count() == g.edge_count());
  }
  CHECK(from_graph6(">>graph6<<Bw").edge_count() == 3);
  CHECK_THROWS_AS(from_graph6("B"), InvalidInput);
}

TEST_CASE("graph6 refuses multigraphs") {
  Multigraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("a", "b", 2);
  CHECK_THROWS_AS(to_graph6(g), InvalidInput);
}

TEST_CASE("edge list round trip keeps labels and multiplicities") {
  Tile s = staircase_tile(3);
  Multigraph g = join(s, invert_right(s)).graph();
  g.add_vertex("lonely");
  Multigraph back = from_edgelist(to_edgelist(g));
  CHECK(back == g);
  Multigraph m;
  m.add_vertex("a");
  m.add_vertex("b");
  m.add_edge("a", "b", 3);
  CHECK(from_edgelist(to_edgelist(m)) == m);
}

TEST_CASE("edge list parsing errors") {
  CHECK(from_edgelist("# comment\na b\nb c 2\n").edge_count() == 3);
  CHECK_THROWS_AS(from_edgelist("a a\n"), InvalidInput);
  CHECK_THROWS_AS(from_edgelist("a b 0\n"), InvalidInput);
  CHECK_THROWS_AS(from_edgelist("a b c d\n"), InvalidInput);
}

TEST_CASE("dot export draws parallel edges") {
  Multigraph m;
  m.add_vertex("a");
  m.add_vertex("b");
  m.add_edge("a", "b", 2);
  std::string dot = to_dot(m);
  CHECK(dot.find("graph \"G\"") == 0);
  std::size_t count = 0;
  for (std::size_t p = dot.find("--"); p != std::string::npos; p = dot.find("--", p + 1)) ++count;
  CHECK(count == 2);
}
