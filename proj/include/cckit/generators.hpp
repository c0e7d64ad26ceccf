#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cckit/multigraph.hpp"
#include "cckit/tile.hpp"

namespace cckit {

/// Staircase tile S_n (n >= 3): walls of size n-1, paths P_1..P_n.
Tile staircase_tile(int n);
/// Vertex labels of P_1..P_n in S_n, wall to wall.
std::vector<std::vector<std::string>> staircase_paths(int n);
/// cyclize(twist(S_n, ^S_n^, ..., S_n)), m >= 3 odd.
Multigraph staircase_strip(int n, int m);

/// H_{l,n}; l = 0 gives S_n itself.
Tile h_tile(int l, int n);
/// G_{l,n} = H (x) ^H^ (x) H.
Tile g_tile(int l, int n);
/// The 3m alternating copies H, ^H^, H, ... making up G(l,n,m) before the twist.
TileSequence g_sequence(int l, int n, int m);
Multigraph g_graph(int l, int n, int m);

Multigraph k33();
Multigraph k5();

/// Local paths of H_{l,n}, as label sequences from left wall to right wall.
struct HPaths {
  std::vector<std::vector<std::string>> p;  // P'_1..P'_l
  std::vector<std::vector<std::string>> q;  // Q'_1..Q'_l
  std::vector<std::vector<std::string>> s;  // S'_1..S'_n
};
HPaths h_paths(int l, int n);

/// Traversing path through a tile as a vertex sequence.
struct TraversingPath {
  std::string name;
  std::vector<VertexId> vertices;
};

/// Twisted join of G(l,n,m)'s sequence with the paths P-bar, Q-bar, S-bar and
/// the pair families A, B, C (pairs of indices into `paths`).
struct PathSystem {
  Tile tile;
  std::vector<TraversingPath> paths;
  std::vector<std::pair<std::size_t, std::size_t>> a;
  std::vector<std::pair<std::size_t, std::size_t>> b;
  std::vector<std::pair<std::size_t, std::size_t>> c;

  std::vector<std::pair<std::size_t, std::size_t>> all_pairs() const;
};
PathSystem path_system(int l, int n, int m);

/// S'_1..S'_n plus F' inside H_{l,n}, reduced back to a tile: the P'/Q' edges
/// are removed, isolated vertices dropped and internal degree-2 vertices suppressed.
Tile h_staircase_part(int l, int n);

long long binomial2(long long n);
/// C(n,2) - 1.
long long staircase_claimed_k(int n);
/// l^2 + C(n,2) - 1 + 2l(n-1).
long long g_claimed_k(int l, int n);

/// What a generator claims about its output.
struct FamilyClaim {
  std::string family;
  int l = 0;
  int n = 0;
  int m = 0;
  long long claimed_k = 0;
  long long threshold_m = 0;
  bool criticality_claimed = false;
};
FamilyClaim staircase_claim(int n, int m);
FamilyClaim g_claim(int l, int n, int m);
FamilyClaim k33_claim();

}  // namespace cckit
