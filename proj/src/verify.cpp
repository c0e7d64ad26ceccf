#include "cckit/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>

namespace cckit {

namespace {

// BFS from `from` avoiding `blocked` vertices; `used` counts multiplicity already consumed per pair.
bool reachable(const Multigraph& g, VertexId from, const std::vector<bool>& target,
               const std::vector<bool>& blocked,
               const std::map<std::pair<VertexId, VertexId>, int>* used = nullptr) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> q{from};
  seen[from] = true;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop_front();
    if (target[u]) return true;
    for (auto [w, k] : g.neighbors(u)) {
      if (seen[w] || blocked[w]) continue;
      if (used) {
        auto it = used->find({std::min(u, w), std::max(u, w)});
        if (it != used->end() && it->second >= k) continue;
      }
      seen[w] = true;
      q.push_back(w);
    }
  }
  return false;
}

bool connected_without(const Multigraph& g, const std::vector<VertexId>& drop) {
  std::vector<bool> removed(g.vertex_count(), false);
  for (VertexId v : drop) removed[v] = true;
  return g.without_vertices(removed).is_connected();
}

// Looks for a path s1-t1 and a path s2-t2 that are edge-disjoint (or vertex-disjoint
// when `strict`). DFS over the first path, pruned by reachability of both.
class DisjointPairs {
 public:
  DisjointPairs(const Multigraph& g, bool strict, std::uint64_t budget)
      : g_(g), strict_(strict), budget_(budget) {}

  // nullopt when the budget ran out.
  std::optional<bool> find(VertexId s1, VertexId t1, VertexId s2, VertexId t2) {
    steps_ = 0;
    exhausted_ = false;
    t1_ = t1;
    s2_ = s2;
    t2_ = t2;
    on_path_.assign(g_.vertex_count(), false);
    used_.clear();
    if (strict_ && (s1 == s2 || s1 == t2 || t1 == s2 || t1 == t2)) return false;
    on_path_[s1] = true;
    bool found = dfs(s1);
    if (exhausted_) return std::nullopt;
    return found;
  }

 private:
  bool second_ok() const {
    std::vector<bool> target(g_.vertex_count(), false);
    target[t2_] = true;
    std::vector<bool> blocked(g_.vertex_count(), false);
    if (strict_) blocked = on_path_;
    return reachable(g_, s2_, target, blocked, &used_);
  }

  bool head_can_finish(VertexId head) const {
    std::vector<bool> target(g_.vertex_count(), false);
    target[t1_] = true;
    std::vector<bool> blocked = on_path_;
    blocked[head] = false;
    if (strict_) {
      blocked[s2_] = true;
      blocked[t2_] = true;
    }
    return reachable(g_, head, target, blocked);
  }

  bool dfs(VertexId head) {
    if (++steps_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (!second_ok()) return false;
    if (head == t1_) return true;
    if (!head_can_finish(head)) return false;
    for (auto [w, k] : g_.neighbors(head)) {
      if (on_path_[w]) continue;
      if (strict_ && (w == s2_ || w == t2_)) continue;
      auto key = std::make_pair(std::min(head, w), std::max(head, w));
      on_path_[w] = true;
      ++used_[key];
      if (dfs(w)) return true;
      if (--used_[key] == 0) used_.erase(key);
      on_path_[w] = false;
      if (exhausted_) return false;
    }
    return false;
  }

  const Multigraph& g_;
  bool strict_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
  VertexId t1_ = 0;
  VertexId s2_ = 0;
  VertexId t2_ = 0;
  std::vector<bool> on_path_;
  std::map<std::pair<VertexId, VertexId>, int> used_;
};

}  // namespace

PerfectnessReport is_perfect(const Tile& t, std::uint64_t pair_budget) {
  PerfectnessReport r;
  const Multigraph& g = t.graph();
  r.equal_walls = t.left().size() == t.right().size();
  if (!r.equal_walls) {
    r.witnesses.push_back("wall sizes differ: " + std::to_string(t.left().size()) + " vs " +
                          std::to_string(t.right().size()));
    return r;
  }

  r.walls_removable = true;
  if (!connected_without(g, t.left())) {
    r.walls_removable = false;
    r.witnesses.push_back("G - lambda is disconnected");
  }
  if (!connected_without(g, t.right())) {
    r.walls_removable = false;
    r.witnesses.push_back("G - rho is disconnected");
  }

  r.wall_reachability = true;
  auto side_check = [&](const std::vector<VertexId>& from, const std::vector<VertexId>& to) {
    std::vector<bool> target(g.vertex_count(), false);
    for (VertexId v : to) target[v] = true;
    for (VertexId v : from) {
      std::vector<bool> blocked(g.vertex_count(), false);
      for (VertexId w : from) blocked[w] = w != v;
      if (!reachable(g, v, target, blocked)) {
        r.wall_reachability = false;
        r.witnesses.push_back("wall vertex '" + g.label(v) + "' cannot reach the opposite wall");
      }
    }
  };
  side_check(t.left(), t.right());
  side_check(t.right(), t.left());

  r.disjoint_pairs = true;
  r.disjoint_pairs_strict = true;
  DisjointPairs loose(g, false, pair_budget);
  DisjointPairs strict(g, true, std::min<std::uint64_t>(pair_budget, 50'000));
  const auto& l = t.left();
  const auto& rho = t.right();
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      auto name = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      auto a = loose.find(l[i], rho[i], l[j], rho[j]);
      if (!a || !*a) {
        r.disjoint_pairs = false;
        if (!a) r.search_exhausted = true;
        r.witnesses.push_back(std::string(a ? "no" : "search budget exhausted for") +
                              " edge-disjoint path pair " + name);
      }
      if (r.disjoint_pairs_strict.value_or(false)) {
        auto b = strict.find(l[i], rho[i], l[j], rho[j]);
        r.disjoint_pairs_strict = b ? std::optional<bool>(*b) : std::nullopt;
      }
    }
  }
  return r;
}

long long verify_twisted_family(const Tile& t, const std::vector<TraversingPath>& paths,
                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const Multigraph& g = t.graph();
  std::set<std::size_t> involved;
  for (auto [p, q] : pairs) {
    if (p >= paths.size() || q >= paths.size() || p == q) {
      throw CertificateError("pair refers to a missing or repeated path");
    }
    involved.insert(p);
    involved.insert(q);
  }

  for (std::size_t idx : involved) {
    const auto& path = paths[idx];
    const auto& vs = path.vertices;
    if (vs.size() < 2) throw CertificateError("path " + path.name + " is too short");
    if (!t.is_left_wall(vs.front()) || !t.is_right_wall(vs.back())) {
      throw CertificateError("path " + path.name + " does not run from the left to the right wall");
    }
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!seen.insert(vs[i]).second) throw CertificateError("path " + path.name + " repeats a vertex");
      if (i > 0 && i + 1 < vs.size() && t.is_wall(vs[i])) {
        throw CertificateError("path " + path.name + " meets wall vertex '" + g.label(vs[i]) +
                               "' internally");
      }
      if (i > 0 && g.multiplicity(vs[i - 1], vs[i]) == 0) {
        throw CertificateError("path " + path.name + " uses a non-edge " + g.label(vs[i - 1]) + "-" +
                               g.label(vs[i]));
      }
    }
  }

  // Edge-disjointness of the union, counting parallel copies.
  std::map<std::pair<VertexId, VertexId>, int> usage;
  for (std::size_t idx : involved) {
    const auto& vs = paths[idx].vertices;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      auto key = std::make_pair(std::min(vs[i], vs[i + 1]), std::max(vs[i], vs[i + 1]));
      if (++usage[key] > g.multiplicity(key.first, key.second)) {
        throw CertificateError("edge " + g.label(key.first) + "-" + g.label(key.second) +
                               " occurs in two paths (last: " + paths[idx].name + ")");
      }
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> distinct;
  for (auto [p, q] : pairs) {
    const auto& a = paths[p];
    const auto& b = paths[q];
    const std::string name = "{" + a.name + ", " + b.name + "}";
    if (!distinct.insert({std::min(p, q), std::max(p, q)}).second) {
      throw CertificateError("pair " + name + " listed twice");
    }
    std::set<VertexId> va(a.vertices.begin(), a.vertices.end());
    for (VertexId v : b.vertices) {
      if (va.contains(v)) throw CertificateError("pair " + name + " shares vertex '" + g.label(v) + "'");
    }
    auto ia = static_cast<long long>(t.left_index(a.vertices.front()));
    auto ja = static_cast<long long>(t.right_index(a.vertices.back()));
    auto ib = static_cast<long long>(t.left_index(b.vertices.front()));
    auto jb = static_cast<long long>(t.right_index(b.vertices.back()));
    if ((ia - ib) * (ja - jb) >= 0) throw CertificateError("pair " + name + " is aligned, not twisted");
  }
  return static_cast<long long>(pairs.size());
}

DegreeHistogram expected_g_histogram(int l, int n, int m) {
  DegreeHistogram h;
  const auto mm = static_cast<std::size_t>(3 * m);
  h.counts[3] += mm * static_cast<std::size_t>(4 * n - 9);
  h.counts[4] += mm * static_cast<std::size_t>(2 * l);
  h.counts[2 * l + 3] += mm;
  return h;
}

Rational expected_g_average(int l, int n) { return Rational(5 * l + 6 * n - 12, l + 2 * n - 4); }

DegreeProfileCheck check_degree_profile(int l, int n, int m) {
  DegreeProfileCheck c;
  c.expected = expected_g_histogram(l, n, m);
  c.expected_average = expected_g_average(l, n);
  Multigraph g = g_graph(l, n, m);
  c.actual = degree_histogram(g);
  c.actual_average = c.actual.average();
  c.ok = c.expected == c.actual && c.expected_average == c.actual_average &&
         c.actual.vertex_count() == static_cast<std::size_t>(3 * m * (2 * l + 4 * n - 8)) &&
         c.actual.degree_sum() == 2 * static_cast<long long>(g.edge_count());
  return c;
}

bool is_three_connected(const Multigraph& g) {
  if (g.vertex_count() < 4 || !g.is_connected()) return false;
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    std::vector<bool> removed(g.vertex_count(), false);
    removed[x] = true;
    Multigraph h = g.without_vertices(removed);
    if (!h.is_connected()) return false;
    Graph bg(h.vertex_count());
    for (const auto& e : h.bundles()) boost::add_edge(e.u, e.v, bg);
    std::vector<std::size_t> cuts;
    boost::articulation_points(bg, std::back_inserter(cuts));
    if (!cuts.empty()) return false;
  }
  return true;
}

}  // namespace cckit
