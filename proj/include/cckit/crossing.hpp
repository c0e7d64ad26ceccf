#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cckit/multigraph.hpp"
#include "cckit/tile.hpp"

namespace cckit {

enum class Verdict { yes, no, unknown };
const char* to_string(Verdict v);

/// Node cap for the exact search. The default comes from CCKIT_ORACLE_BUDGET
/// when set, otherwise 20 million planarization nodes.
std::uint64_t default_oracle_budget();

/// Crossings of a drawing as pairs of original edges (u, v) endpoints.
struct CrossingSet {
  std::vector<std::pair<EdgeBundle, EdgeBundle>> pairs;
  long long weight = 0;  // sum of multiplicity products
};

struct OracleRun {
  Verdict verdict = Verdict::unknown;
  std::uint64_t nodes = 0;
  std::optional<CrossingSet> witness;  // set when verdict == yes
};

/// Decides cr(G) <= k by recursive planarization. Parallel edges count as a
/// bundle: crossing bundles of multiplicities a and b costs a*b. Only
/// independent edge pairs cross, and each pair at most once.
OracleRun cr_leq(const Multigraph& g, long long k, std::uint64_t budget = default_oracle_budget());

struct CrossingNumber {
  std::optional<long long> value;  // exact value if found
  bool budget_exceeded = false;    // search gave up
  std::uint64_t nodes = 0;
  std::optional<CrossingSet> witness;
};

/// Smallest k <= k_max with cr_leq true; empty value with budget_exceeded
/// false means cr(G) > k_max.
CrossingNumber crossing_number_exact(const Multigraph& g, long long k_max,
                                     std::uint64_t budget = default_oracle_budget());

struct CriticalityRun {
  Verdict verdict = Verdict::unknown;
  std::uint64_t nodes = 0;
  /// First edge whose deletion keeps cr >= k, when verdict == no for that reason.
  std::optional<EdgeBundle> witness_edge;
  bool lower_bound_failed = false;  // cr(G) <= k-1
};

/// cr(G) >= k and cr(G - e) < k for every edge e. Budget applies per oracle call.
CriticalityRun is_k_crossing_critical(const Multigraph& g, long long k,
                                      std::uint64_t budget = default_oracle_budget());

/// Exact tile crossing number up to k_max: framed graph with frame and apex
/// edges of multiplicity k_max + 1, so no drawing within budget crosses them.
CrossingNumber tile_crossing_number(const Tile& t, long long k_max,
                                    std::uint64_t budget = default_oracle_budget());

}  // namespace cckit
