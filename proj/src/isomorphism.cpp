#include "cckit/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace cckit {

namespace {

// Both graphs live in one id space: A is 0..na-1, B is na..na+nb-1.
struct Union {
  std::size_t na = 0;
  std::vector<std::vector<std::pair<VertexId, int>>> adj;
};

using Colours = std::vector<int>;

// Refines to a stable colouring. New ids come from sorted signatures, so they
// are comparable across the two halves.
Colours refine(const Union& u, Colours c) {
  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> ids;
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(c.size());
    for (VertexId v = 0; v < c.size(); ++v) {
      std::vector<std::pair<int, int>> nb;
      nb.reserve(u.adj[v].size());
      for (auto [w, k] : u.adj[v]) nb.emplace_back(c[w], k);
      std::sort(nb.begin(), nb.end());
      sig[v] = {c[v], std::move(nb)};
      ids.emplace(sig[v], 0);
    }
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    Colours out(c.size());
    for (VertexId v = 0; v < c.size(); ++v) out[v] = ids.at(sig[v]);
    c = std::move(out);
    if (ids.size() == classes) return c;
    classes = ids.size();
  }
}

bool balanced(const Union& u, const Colours& c) {
  std::map<int, long> diff;
  for (VertexId v = 0; v < c.size(); ++v) diff[c[v]] += v < u.na ? 1 : -1;
  return std::all_of(diff.begin(), diff.end(), [](const auto& p) { return p.second == 0; });
}

bool search(const Union& u, const Colours& start, std::vector<VertexId>& mapping) {
  Colours c = refine(u, start);
  if (!balanced(u, c)) return false;

  std::map<int, std::vector<VertexId>> cls_a;
  std::map<int, std::vector<VertexId>> cls_b;
  for (VertexId v = 0; v < c.size(); ++v) (v < u.na ? cls_a : cls_b)[c[v]].push_back(v);

  int pick = -1;
  std::size_t best = 0;
  for (const auto& [col, vs] : cls_a) {
    if (vs.size() > 1 && (pick < 0 || vs.size() < best)) {
      pick = col;
      best = vs.size();
    }
  }
  if (pick < 0) {
    mapping.assign(u.na, 0);
    for (const auto& [col, vs] : cls_a) mapping[vs[0]] = cls_b.at(col)[0] - u.na;
    for (VertexId v = 0; v < u.na; ++v) {
      for (auto [w, k] : u.adj[v]) {
        VertexId mv = mapping[v] + u.na;
        VertexId mw = mapping[w] + u.na;
        auto it = std::find_if(u.adj[mv].begin(), u.adj[mv].end(),
                               [&](const auto& p) { return p.first == mw; });
        if (it == u.adj[mv].end() || it->second != k) return false;
      }
    }
    return true;
  }

  int fresh = *std::max_element(c.begin(), c.end()) + 1;
  VertexId x = cls_a[pick][0];
  for (VertexId y : cls_b[pick]) {
    Colours next = c;
    next[x] = fresh;
    next[y] = fresh;
    if (search(u, next, mapping)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<VertexId>> find_isomorphism(const Multigraph& a, const Multigraph& b,
                                                      const std::vector<int>& colour_a,
                                                      const std::vector<int>& colour_b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
      a.bundle_count() != b.bundle_count()) {
    return std::nullopt;
  }
  Union u;
  u.na = a.vertex_count();
  u.adj.resize(u.na + b.vertex_count());
  for (VertexId v = 0; v < a.vertex_count(); ++v) {
    for (auto [w, k] : a.neighbors(v)) u.adj[v].emplace_back(w, k);
  }
  for (VertexId v = 0; v < b.vertex_count(); ++v) {
    for (auto [w, k] : b.neighbors(v)) u.adj[v + u.na].emplace_back(w + u.na, k);
  }
  Colours c(u.adj.size(), 0);
  for (VertexId v = 0; v < colour_a.size() && v < u.na; ++v) c[v] = colour_a[v];
  for (VertexId v = 0; v < colour_b.size() && v < b.vertex_count(); ++v) c[v + u.na] = colour_b[v];

  std::vector<VertexId> mapping;
  if (!search(u, c, mapping)) return std::nullopt;
  return mapping;
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  return find_isomorphism(a, b).has_value();
}

bool tile_isomorphic(const Tile& a, const Tile& b) {
  if (a.left().size() != b.left().size() || a.right().size() != b.right().size()) return false;
  auto colours = [](const Tile& t) {
    std::vector<int> c(t.graph().vertex_count(), 0);
    for (std::size_t i = 0; i < t.left().size(); ++i) c[t.left()[i]] = 1 + static_cast<int>(i);
    int off = 1 + static_cast<int>(t.left().size());
    for (std::size_t i = 0; i < t.right().size(); ++i) c[t.right()[i]] = off + static_cast<int>(i);
    return c;
  };
  return find_isomorphism(a.graph(), b.graph(), colours(a), colours(b)).has_value();
}

}  // namespace cckit
