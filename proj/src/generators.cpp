#include "cckit/generators.hpp"

#include <set>

namespace cckit {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidInput(msg);
}

std::string lw(int i) { return "L" + std::to_string(i); }
std::string rw(int i) { return "R" + std::to_string(i); }

// Adds the labelled paths to g, creating vertices on first use.
void add_paths(Multigraph& g, const std::vector<std::vector<std::string>>& paths) {
  for (const auto& p : paths) {
    for (const auto& s : p) {
      if (!g.find(s)) g.add_vertex(s, s[0] == 'L' || s[0] == 'R' ? "wall" : "internal");
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) g.add_edge(p[i], p[i + 1]);
  }
}

std::vector<std::string> wall_labels(const char* side, int from, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(side + std::to_string(from + i));
  return out;
}

// Extra (non-path) edges of S_n, by label.
std::vector<std::pair<std::string, std::string>> staircase_extra(int n) {
  std::vector<std::pair<std::string, std::string>> e{{"u1", "u2"}, {"v1", "v2"}};
  for (int i = 2; i <= n - 2; ++i) {
    e.emplace_back("u'" + std::to_string(i), "u" + std::to_string(i + 1));
    e.emplace_back("v'" + std::to_string(i), "v" + std::to_string(i + 1));
  }
  return e;
}

void validate_lnm(int l, int n, int m) {
  require(l >= 0, "l must be >= 0");
  require(n >= 3, "n must be >= 3");
  require(m >= 3 && m % 2 == 1, "m must be odd and >= 3, got " + std::to_string(m));
}

}  // namespace

std::vector<std::vector<std::string>> staircase_paths(int n) {
  require(n >= 3, "staircase width must be >= 3, got " + std::to_string(n));
  // Left and right wall index of P_i.
  auto left_of = [](int i) { return i == 1 ? 1 : i - 1; };
  auto right_of = [n](int i) { return i == n ? n - 1 : i; };
  std::vector<std::vector<std::string>> paths;
  for (int i = 1; i <= n; ++i) {
    std::vector<std::string> p{lw(left_of(i))};
    // u_{i-1} (and u'_{i-1}) live on P_i; v_{n-i} (and v'_{n-i}) on P_i.
    int ui = i - 1;
    if (ui >= 1 && ui <= n - 1) {
      p.push_back("u" + std::to_string(ui));
      if (ui >= 2 && ui <= n - 2) p.push_back("u'" + std::to_string(ui));
    }
    int vi = n - i;
    if (vi >= 1 && vi <= n - 1) {
      if (vi >= 2 && vi <= n - 2) p.push_back("v'" + std::to_string(vi));
      p.push_back("v" + std::to_string(vi));
    }
    p.push_back(rw(right_of(i)));
    paths.push_back(std::move(p));
  }
  return paths;
}

Tile staircase_tile(int n) {
  auto paths = staircase_paths(n);
  Multigraph g;
  for (const auto& s : wall_labels("L", 1, n - 1)) g.add_vertex(s, "wall");
  for (const auto& s : wall_labels("R", 1, n - 1)) g.add_vertex(s, "wall");
  add_paths(g, paths);
  for (const auto& [a, b] : staircase_extra(n)) g.add_edge(a, b);
  return Tile::from_labels(std::move(g), wall_labels("L", 1, n - 1), wall_labels("R", 1, n - 1));
}

Multigraph staircase_strip(int n, int m) {
  validate_lnm(0, n, m);
  Tile s = staircase_tile(n);
  Tile inv = invert(s);
  TileSequence seq;
  for (int i = 0; i < m; ++i) seq.push_back(i % 2 == 0 ? s : inv);
  return cyclize(twist(seq));
}

HPaths h_paths(int l, int n) {
  require(l >= 0, "l must be >= 0");
  require(n >= 3, "n must be >= 3");
  HPaths hp;
  // Staircase block occupies wall positions l+1..l+n-1.
  for (auto p : staircase_paths(n)) {
    for (auto& s : p) {
      if (s[0] == 'L' || s[0] == 'R') s = s.substr(0, 1) + std::to_string(l + std::stoi(s.substr(1)));
    }
    hp.s.push_back(std::move(p));
  }
  if (l == 0) return hp;

  const std::string apex = "v" + std::to_string(n - 1);  // interior vertex of S'_1
  for (int i = 1; i <= l; ++i) hp.p.push_back({lw(l + 1 - i), apex, rw(l + 1 - i)});

  auto s = [](int i) { return "s" + std::to_string(i); };
  auto t = [](int i) { return "t" + std::to_string(i); };
  auto& sn = hp.s.back();  // (L, u_{n-1}, R)
  if (l == 1) {
    sn.insert(sn.end() - 1, "z");
  } else {
    sn.insert(sn.end() - 1, s(1));
    sn.insert(sn.end() - 1, t(1));
  }
  for (int i = 1; i <= l; ++i) {
    const int pos = l + n - 1 + i;
    std::vector<std::string> q{lw(pos)};
    if (i <= l - 2) {
      q.insert(q.end(), {s(i), s(i + 1), t(i + 1), t(i)});
    } else if (i == l - 1) {
      q.insert(q.end(), {s(i), "z", t(i)});
    } else {
      q.push_back("z");
    }
    q.push_back(rw(pos));
    hp.q.push_back(std::move(q));
  }
  return hp;
}

Tile h_tile(int l, int n) {
  HPaths hp = h_paths(l, n);
  const int w = 2 * l + n - 1;
  Multigraph g;
  for (const auto& s : wall_labels("L", 1, w)) g.add_vertex(s, "wall");
  for (const auto& s : wall_labels("R", 1, w)) g.add_vertex(s, "wall");
  add_paths(g, hp.s);
  add_paths(g, hp.p);
  add_paths(g, hp.q);
  for (const auto& [a, b] : staircase_extra(n)) g.add_edge(a, b);
  return Tile::from_labels(std::move(g), wall_labels("L", 1, w), wall_labels("R", 1, w));
}

Tile g_tile(int l, int n) {
  Tile h = h_tile(l, n);
  std::array<Tile, 3> seq{h, invert(h), h};
  return join(seq);
}

TileSequence g_sequence(int l, int n, int m) {
  validate_lnm(l, n, m);
  Tile h = h_tile(l, n);
  Tile inv = invert(h);
  TileSequence seq;
  for (int i = 0; i < 3 * m; ++i) seq.push_back(i % 2 == 0 ? h : inv);
  return seq;
}

Multigraph g_graph(int l, int n, int m) { return cyclize(twist(g_sequence(l, n, m))); }

Multigraph k33() {
  Multigraph g;
  for (const char* s : {"a1", "a2", "a3", "b1", "b2", "b3"}) g.add_vertex(s);
  for (VertexId a = 0; a < 3; ++a) {
    for (VertexId b = 3; b < 6; ++b) g.add_edge(a, b);
  }
  return g;
}

Multigraph k5() {
  Multigraph g;
  for (int i = 1; i <= 5; ++i) g.add_vertex("x" + std::to_string(i));
  for (VertexId a = 0; a < 5; ++a) {
    for (VertexId b = a + 1; b < 5; ++b) g.add_edge(a, b);
  }
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> PathSystem::all_pairs() const {
  auto out = a;
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

PathSystem path_system(int l, int n, int m) {
  require(l >= 1, "path system needs l >= 1");
  TileSequence seq = g_sequence(l, n, m);
  TracedJoin tj = join_traced(seq);
  HPaths hp = h_paths(l, n);
  const Multigraph& hg = seq.front().graph();

  // Follows local paths through the copies; `pick(h)` chooses the local path in copy h.
  auto trace = [&](const std::string& name, auto pick) {
    TraversingPath tp{name, {}};
    for (std::size_t h = 0; h < seq.size(); ++h) {
      for (const auto& label : pick(h)) {
        auto v = tj.origin[h][hg.id(label)];
        if (!v) continue;
        if (!tp.vertices.empty() && tp.vertices.back() == *v) continue;
        tp.vertices.push_back(*v);
      }
    }
    return tp;
  };

  PathSystem ps;
  for (int i = 0; i < l; ++i) {
    ps.paths.push_back(trace("P" + std::to_string(i + 1), [&](std::size_t h) {
      return h % 2 == 0 ? hp.p[i] : hp.q[i];
    }));
  }
  for (int i = 0; i < l; ++i) {
    ps.paths.push_back(trace("Q" + std::to_string(i + 1), [&](std::size_t h) {
      return h % 2 == 0 ? hp.q[i] : hp.p[i];
    }));
  }
  for (int j = 0; j < n; ++j) {
    ps.paths.push_back(trace("S" + std::to_string(j + 1), [&](std::size_t h) {
      return h % 2 == 0 ? hp.s[j] : hp.s[n - 1 - j];
    }));
  }
  const std::size_t p0 = 0;
  const auto q0 = static_cast<std::size_t>(l);
  const auto s0 = static_cast<std::size_t>(2 * l);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) ps.a.emplace_back(p0 + i, q0 + j);
    for (int j = 1; j < n; ++j) ps.b.emplace_back(p0 + i, s0 + j);
    for (int j = 0; j < n - 1; ++j) ps.c.emplace_back(q0 + i, s0 + j);
  }
  ps.tile = invert_right(tj.tile);
  return ps;
}

Tile h_staircase_part(int l, int n) {
  Tile h = h_tile(l, n);
  HPaths hp = h_paths(l, n);
  Multigraph g = h.graph();
  for (const auto* family : {&hp.p, &hp.q}) {
    for (const auto& p : *family) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) g.remove_edge(g.id(p[i]), g.id(p[i + 1]));
    }
  }
  std::vector<bool> removed(g.vertex_count(), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) removed[v] = g.degree(v) == 0;
  std::vector<std::optional<VertexId>> remap;
  Multigraph trimmed = g.without_vertices(removed, &remap);

  std::vector<bool> keep(trimmed.vertex_count(), false);
  std::vector<std::string> left;
  std::vector<std::string> right;
  for (int j = 1; j <= n - 1; ++j) {
    left.push_back(lw(l + j));
    right.push_back(rw(l + j));
    keep[trimmed.id(left.back())] = true;
    keep[trimmed.id(right.back())] = true;
  }
  return Tile::from_labels(suppress_degree_two(trimmed, keep), left, right);
}

long long binomial2(long long n) { return n * (n - 1) / 2; }

long long staircase_claimed_k(int n) { return binomial2(n) - 1; }

long long g_claimed_k(int l, int n) {
  const long long ll = l;
  return ll * ll + binomial2(n) - 1 + 2 * ll * (n - 1);
}

FamilyClaim staircase_claim(int n, int m) {
  validate_lnm(0, n, m);
  FamilyClaim c{"staircase", 0, n, m, staircase_claimed_k(n), 4 * binomial2(n) - 5, false};
  c.criticality_claimed = m >= c.threshold_m;
  return c;
}

FamilyClaim g_claim(int l, int n, int m) {
  validate_lnm(l, n, m);
  require(l >= 1, "G(l,n,m) needs l >= 1");
  FamilyClaim c{"g", l, n, m, g_claimed_k(l, n), 0, false};
  c.threshold_m = 4 * c.claimed_k - 1;
  c.criticality_claimed = m >= c.threshold_m;
  return c;
}

FamilyClaim k33_claim() { return FamilyClaim{"k33", 0, 0, 0, 1, 0, true}; }

}  // namespace cckit
