#include "cckit/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace cckit {

bool is_planar(const Multigraph& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph bg(g.vertex_count());
  for (const auto& e : g.bundles()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

Multigraph framed_graph(const Tile& t, int frame_multiplicity) {
  Multigraph g = t.graph();
  VertexId a = g.add_vertex("#frame.a", "frame");
  VertexId b = g.add_vertex("#frame.b", "frame");
  VertexId apex = g.add_vertex("#frame.apex", "frame");
  std::vector<VertexId> cycle{a};
  cycle.insert(cycle.end(), t.left().begin(), t.left().end());
  cycle.push_back(b);
  cycle.insert(cycle.end(), t.right().rbegin(), t.right().rend());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    g.add_edge(cycle[i], cycle[(i + 1) % cycle.size()], frame_multiplicity);
    g.add_edge(apex, cycle[i], frame_multiplicity);
  }
  return g;
}

bool tile_planar(const Tile& t) { return is_planar(framed_graph(t)); }

}  // namespace cckit
