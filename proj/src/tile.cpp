#include "cckit/tile.hpp"

#include <algorithm>
#include <set>

namespace cckit {

Tile::Tile(Multigraph graph, std::vector<VertexId> left, std::vector<VertexId> right)
    : graph_(std::move(graph)), left_(std::move(left)), right_(std::move(right)) {
  std::set<VertexId> seen_left;
  for (VertexId v : left_) {
    if (v >= graph_.vertex_count()) throw InvalidInput("left wall vertex is not in the graph");
    if (!seen_left.insert(v).second) throw InvalidInput("repeated vertex in left wall");
  }
  std::set<VertexId> seen_right;
  for (VertexId v : right_) {
    if (v >= graph_.vertex_count()) throw InvalidInput("right wall vertex is not in the graph");
    if (!seen_right.insert(v).second) throw InvalidInput("repeated vertex in right wall");
    if (seen_left.contains(v)) {
      throw InvalidInput("vertex '" + graph_.label(v) + "' lies on both walls");
    }
  }
}

Tile Tile::from_labels(Multigraph graph, const std::vector<std::string>& left,
                       const std::vector<std::string>& right) {
  std::vector<VertexId> l;
  std::vector<VertexId> r;
  for (const auto& s : left) l.push_back(graph.id(s));
  for (const auto& s : right) r.push_back(graph.id(s));
  return Tile(std::move(graph), std::move(l), std::move(r));
}

bool Tile::is_left_wall(VertexId v) const { return left_index(v) != 0; }
bool Tile::is_right_wall(VertexId v) const { return right_index(v) != 0; }

std::size_t Tile::left_index(VertexId v) const {
  auto it = std::find(left_.begin(), left_.end(), v);
  return it == left_.end() ? 0 : static_cast<std::size_t>(it - left_.begin()) + 1;
}

std::size_t Tile::right_index(VertexId v) const {
  auto it = std::find(right_.begin(), right_.end(), v);
  return it == right_.end() ? 0 : static_cast<std::size_t>(it - right_.begin()) + 1;
}

Tile invert_right(const Tile& t) {
  std::vector<VertexId> r(t.right().rbegin(), t.right().rend());
  return Tile(t.graph(), t.left(), std::move(r));
}

Tile invert_left(const Tile& t) {
  std::vector<VertexId> l(t.left().rbegin(), t.left().rend());
  return Tile(t.graph(), std::move(l), t.right());
}

Tile invert(const Tile& t) { return invert_left(invert_right(t)); }

Tile reverse(const Tile& t) { return Tile(t.graph(), t.right(), t.left()); }

TileSequence twist(const TileSequence& seq) {
  if (seq.empty()) throw InvalidInput("twist of an empty sequence");
  TileSequence out = seq;
  out.back() = invert_right(out.back());
  return out;
}

TileSequence cut(const TileSequence& seq, std::size_t i) {
  if (i >= seq.size()) {
    throw InvalidInput("cut index " + std::to_string(i) + " out of range for a sequence of " +
                       std::to_string(seq.size()) + " tiles");
  }
  TileSequence out;
  for (std::size_t j = i + 1; j < seq.size(); ++j) out.push_back(seq[j]);
  for (std::size_t j = 0; j < i; ++j) out.push_back(seq[j]);
  return out;
}

bool is_compatible(std::span<const Tile> seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!seq[i].compatible_with(seq[i + 1])) return false;
  }
  return true;
}

bool is_cyclically_compatible(std::span<const Tile> seq) {
  return !seq.empty() && is_compatible(seq) && seq.back().compatible_with(seq.front());
}

namespace {

struct Glued {
  Multigraph graph;
  std::vector<std::vector<std::optional<VertexId>>> origin;
  std::vector<bool> identified;
};

// Disjoint union of the tiles with right wall of tile i glued to the left wall
// of tile i+1 (and the last to the first when `cyclic`), followed by
// suppression of glued vertices that end up with degree 2.
Glued glue(std::span<const Tile> seq, bool cyclic) {
  Glued out;
  const std::size_t m = seq.size();
  out.origin.resize(m);
  std::vector<std::vector<VertexId>> pre(m);

  for (std::size_t i = 0; i < m; ++i) {
    const Multigraph& g = seq[i].graph();
    const std::string prefix = "t" + std::to_string(i) + ".";
    pre[i].assign(g.vertex_count(), 0);
    std::vector<bool> glued_left(g.vertex_count(), false);
    if (i > 0 || cyclic) {
      for (VertexId v : seq[i].left()) glued_left[v] = true;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (glued_left[v]) continue;  // aliased to the previous tile's right wall below
      pre[i][v] = out.graph.add_vertex(prefix + g.label(v), g.role(v));
    }
    if (i > 0) {
      const auto& prev_right = seq[i - 1].right();
      const auto& left = seq[i].left();
      for (std::size_t p = 0; p < left.size(); ++p) pre[i][left[p]] = pre[i - 1][prev_right[p]];
    }
  }
  if (cyclic) {
    const auto& last_right = seq[m - 1].right();
    const auto& left = seq[0].left();
    for (std::size_t p = 0; p < left.size(); ++p) pre[0][left[p]] = pre[m - 1][last_right[p]];
  }

  out.identified.assign(out.graph.vertex_count(), false);
  for (std::size_t i = 0; i < m; ++i) {
    if (i == 0 && !cyclic) continue;
    for (VertexId v : seq[i].left()) out.identified[pre[i][v]] = true;
  }

  for (std::size_t i = 0; i < m; ++i) {
    const Multigraph& g = seq[i].graph();
    for (const auto& e : g.bundles()) {
      VertexId a = pre[i][e.u];
      VertexId b = pre[i][e.v];
      if (a == b) {
        throw InvalidInput("identifying walls would create a loop at '" + out.graph.label(a) + "'");
      }
      out.graph.add_edge(a, b, e.multiplicity);
    }
  }

  // Suppress glued degree-2 vertices; keep everything else.
  std::vector<bool> keep(out.graph.vertex_count(), true);
  for (VertexId v = 0; v < keep.size(); ++v) keep[v] = !out.identified[v];
  Multigraph work = out.graph;
  std::vector<bool> removed(work.vertex_count(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < work.vertex_count(); ++v) {
      if (removed[v] || keep[v]) continue;
      const auto& nb = work.neighbors(v);
      if (nb.size() != 2) continue;
      auto it = nb.begin();
      auto [a, ka] = *it++;
      auto [b, kb] = *it;
      if (ka != 1 || kb != 1) continue;
      work.remove_edge(v, a);
      work.remove_edge(v, b);
      work.add_edge(a, b);
      removed[v] = true;
      changed = true;
    }
  }
  std::vector<std::optional<VertexId>> remap;
  out.graph = work.without_vertices(removed, &remap);
  std::vector<bool> identified(out.graph.vertex_count(), false);
  for (VertexId v = 0; v < remap.size(); ++v) {
    if (remap[v] && out.identified[v]) identified[*remap[v]] = true;
  }
  out.identified = std::move(identified);

  for (std::size_t i = 0; i < m; ++i) {
    out.origin[i].resize(pre[i].size());
    for (VertexId v = 0; v < pre[i].size(); ++v) out.origin[i][v] = remap[pre[i][v]];
  }
  return out;
}

}  // namespace

TracedJoin join_traced(std::span<const Tile> seq) {
  if (seq.empty()) throw InvalidInput("join of an empty sequence");
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!seq[i].compatible_with(seq[i + 1])) {
      throw InvalidInput("tiles " + std::to_string(i) + " and " + std::to_string(i + 1) +
                         " are not compatible (wall sizes " + std::to_string(seq[i].right().size()) +
                         " and " + std::to_string(seq[i + 1].left().size()) + ")");
    }
  }
  Glued g = glue(seq, false);
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  for (VertexId v : seq.front().left()) left.push_back(*g.origin.front()[v]);
  for (VertexId v : seq.back().right()) right.push_back(*g.origin.back()[v]);
  return TracedJoin{Tile(std::move(g.graph), std::move(left), std::move(right)), std::move(g.origin)};
}

Tile join(const Tile& a, const Tile& b) {
  std::array<Tile, 2> seq{a, b};
  return join_traced(seq).tile;
}

Tile join(std::span<const Tile> seq) { return join_traced(seq).tile; }

Multigraph cyclize(const Tile& t) {
  if (!t.cyclically_compatible()) {
    throw InvalidInput("cyclization needs equal wall sizes, got " + std::to_string(t.left().size()) +
                       " and " + std::to_string(t.right().size()));
  }
  // Identify rho_i into lambda_i, keeping the lambda label.
  const Multigraph& g = t.graph();
  std::vector<VertexId> target(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) target[v] = v;
  for (std::size_t i = 0; i < t.left().size(); ++i) target[t.right()[i]] = t.left()[i];

  Multigraph work;
  std::vector<VertexId> to_new(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (target[v] != v) continue;
    to_new[v] = work.add_vertex(g.label(v), g.role(v));
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) to_new[v] = to_new[target[v]];
  for (const auto& e : g.bundles()) {
    VertexId a = to_new[e.u];
    VertexId b = to_new[e.v];
    if (a == b) {
      throw InvalidInput("cyclization would create a loop at '" + work.label(a) + "'");
    }
    work.add_edge(a, b, e.multiplicity);
  }
  std::vector<bool> keep(work.vertex_count(), true);
  for (VertexId v : t.left()) keep[to_new[v]] = false;
  return suppress_degree_two(work, keep);
}

Multigraph cyclize(std::span<const Tile> seq) {
  if (!is_cyclically_compatible(seq)) throw InvalidInput("sequence is not cyclically compatible");
  return glue(seq, true).graph;
}

bool zippable(const Multigraph& g, VertexId v) {
  if (g.degree(v) != 3 || g.neighbors(v).size() != 3) return false;
  std::vector<bool> removed(g.vertex_count(), false);
  removed[v] = true;
  return g.without_vertices(removed).is_connected();
}

Multigraph zip(const Multigraph& g1, VertexId v1, const Multigraph& g2, VertexId v2,
               std::array<int, 3> pairing, const ZipLabels& labels) {
  auto check = [](const Multigraph& g, VertexId v, const char* which) {
    if (v >= g.vertex_count()) throw InvalidInput(std::string("zip vertex not in ") + which);
    if (g.degree(v) != 3) {
      throw InvalidInput(std::string("zip vertex of ") + which + " has degree " +
                         std::to_string(g.degree(v)) + ", expected 3");
    }
    if (g.neighbors(v).size() != 3) {
      throw InvalidInput(std::string("zip vertex of ") + which + " is incident to a multi-edge");
    }
    std::vector<bool> removed(g.vertex_count(), false);
    removed[v] = true;
    if (!g.without_vertices(removed).is_connected()) {
      throw InvalidInput(std::string("deleting the zip vertex disconnects ") + which);
    }
  };
  check(g1, v1, "G1");
  check(g2, v2, "G2");
  std::array<int, 3> sorted = pairing;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) throw InvalidInput("zip pairing is not a bijection");

  Multigraph out;
  std::vector<std::optional<VertexId>> m1(g1.vertex_count());
  std::vector<std::optional<VertexId>> m2(g2.vertex_count());
  for (VertexId v = 0; v < g1.vertex_count(); ++v) {
    if (v != v1) m1[v] = out.add_vertex(labels.left_prefix + g1.label(v), g1.role(v));
  }
  for (VertexId v = 0; v < g2.vertex_count(); ++v) {
    if (v != v2) m2[v] = out.add_vertex(labels.right_prefix + g2.label(v), g2.role(v));
  }
  for (const auto& e : g1.bundles()) {
    if (m1[e.u] && m1[e.v]) out.add_edge(*m1[e.u], *m1[e.v], e.multiplicity);
  }
  for (const auto& e : g2.bundles()) {
    if (m2[e.u] && m2[e.v]) out.add_edge(*m2[e.u], *m2[e.v], e.multiplicity);
  }
  std::vector<VertexId> n1;
  std::vector<VertexId> n2;
  for (const auto& [w, k] : g1.neighbors(v1)) n1.push_back(w);
  for (const auto& [w, k] : g2.neighbors(v2)) n2.push_back(w);
  for (int j = 0; j < 3; ++j) out.add_edge(*m1[n1[j]], *m2[n2[pairing[j]]]);
  return out;
}

}  // namespace cckit
