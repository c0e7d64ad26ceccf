#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cckit/crossing.hpp"
#include "cckit/generators.hpp"
#include "cckit/multigraph.hpp"
#include "cckit/planarity.hpp"
#include "cckit/tile.hpp"

namespace cckit {

struct PerfectnessReport {
  bool equal_walls = false;         // |lambda| == |rho|
  bool walls_removable = false;     // G - lambda and G - rho connected
  bool wall_reachability = false;   // every wall vertex reaches the other wall
  bool disjoint_pairs = false;      // edge-disjoint lambda_i-rho_i / lambda_j-rho_j paths
  /// Same condition with vertex-disjoint paths; informational only, searched
  /// with a small budget. nullopt when that search gave up.
  std::optional<bool> disjoint_pairs_strict;
  /// Pair search ran out of budget somewhere (that pair counts as failed).
  bool search_exhausted = false;
  std::vector<std::string> witnesses;

  bool perfect() const { return equal_walls && walls_removable && wall_reachability && disjoint_pairs; }
};

/// `pair_budget` caps DFS steps per wall pair.
PerfectnessReport is_perfect(const Tile& t, std::uint64_t pair_budget = 2'000'000);

/// Raised when a certificate fails; the message names the offending pair or path.
class CertificateError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Checks a twisted family and returns its size, a lower bound on tcr(T).
long long verify_twisted_family(const Tile& t, const std::vector<TraversingPath>& paths,
                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

struct DegreeProfileCheck {
  bool ok = false;
  DegreeHistogram expected;
  DegreeHistogram actual;
  Rational expected_average;
  Rational actual_average;
};

/// Closed-form histogram of G(l,n,m).
DegreeHistogram expected_g_histogram(int l, int n, int m);
/// (5l + 6n - 12) / (l + 2n - 4)
Rational expected_g_average(int l, int n);
DegreeProfileCheck check_degree_profile(int l, int n, int m);

/// Removing any single vertex leaves a connected graph without cut vertices.
bool is_three_connected(const Multigraph& g);

}  // namespace cckit
