#pragma once

#include "cckit/multigraph.hpp"
#include "cckit/tile.hpp"

namespace cckit {

/// Boyer-Myrvold test on the underlying simple graph.
bool is_planar(const Multigraph& g);

/// Frame cycle a - lambda_1..lambda_l - b - rho_r..rho_1 - a plus an apex on
/// every frame vertex. Frame edges get `frame_multiplicity` copies (apex edges too).
Multigraph framed_graph(const Tile& t, int frame_multiplicity = 1);

/// tcr(T) == 0, via planarity of the framed graph.
bool tile_planar(const Tile& t);

}  // namespace cckit
