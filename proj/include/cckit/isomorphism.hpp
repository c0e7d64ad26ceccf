#pragma once

#include <optional>
#include <vector>

#include "cckit/multigraph.hpp"
#include "cckit/tile.hpp"

namespace cckit {

/// Colour refinement plus individualization search. Multiplicities must match
/// exactly. `colour_a` / `colour_b` optionally pin vertices to classes that the
/// mapping has to respect (empty means no constraint).
std::optional<std::vector<VertexId>> find_isomorphism(const Multigraph& a, const Multigraph& b,
                                                      const std::vector<int>& colour_a = {},
                                                      const std::vector<int>& colour_b = {});

bool isomorphic(const Multigraph& a, const Multigraph& b);

/// Isomorphism mapping lambda_i to lambda'_i and rho_i to rho'_i.
bool tile_isomorphic(const Tile& a, const Tile& b);

}  // namespace cckit
