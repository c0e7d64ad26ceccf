#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cckit/multigraph.hpp"

namespace cckit {

/// A multigraph with an ordered left wall and an ordered right wall.
///
/// Walls hold distinct vertices and are disjoint from each other. The
/// constructor checks both invariants.
class Tile {
 public:
  Tile() = default;
  Tile(Multigraph graph, std::vector<VertexId> left, std::vector<VertexId> right);
  /// Convenience form taking wall labels.
  static Tile from_labels(Multigraph graph, const std::vector<std::string>& left,
                          const std::vector<std::string>& right);

  const Multigraph& graph() const { return graph_; }
  const std::vector<VertexId>& left() const { return left_; }
  const std::vector<VertexId>& right() const { return right_; }

  bool is_left_wall(VertexId v) const;
  bool is_right_wall(VertexId v) const;
  bool is_wall(VertexId v) const { return is_left_wall(v) || is_right_wall(v); }
  /// 1-based position in the left / right wall, 0 if absent.
  std::size_t left_index(VertexId v) const;
  std::size_t right_index(VertexId v) const;

  bool compatible_with(const Tile& next) const { return right_.size() == next.left_.size(); }
  bool cyclically_compatible() const { return left_.size() == right_.size(); }

  friend bool operator==(const Tile&, const Tile&) = default;

 private:
  Multigraph graph_;
  std::vector<VertexId> left_;
  std::vector<VertexId> right_;
};

using TileSequence = std::vector<Tile>;

Tile invert_right(const Tile& t);
Tile invert_left(const Tile& t);
/// Both walls reversed.
Tile invert(const Tile& t);
/// Walls swapped.
Tile reverse(const Tile& t);

/// Last tile right-inverted.
TileSequence twist(const TileSequence& seq);
/// (T_{i+1}, ..., T_m, T_0, ..., T_{i-1}); throws InvalidInput when i is out of range.
TileSequence cut(const TileSequence& seq, std::size_t i);

bool is_compatible(std::span<const Tile> seq);
bool is_cyclically_compatible(std::span<const Tile> seq);

/// Join of a sequence with identification provenance.
///
/// Vertex labels of tile i are prefixed with "t<i>."; an identified wall pair
/// keeps the label of the left tile's right-wall vertex. `origin[i][v]` is the
/// result vertex of input vertex v of tile i, or nullopt if it was suppressed.
struct TracedJoin {
  Tile tile;
  std::vector<std::vector<std::optional<VertexId>>> origin;
};

TracedJoin join_traced(std::span<const Tile> seq);
Tile join(const Tile& a, const Tile& b);
Tile join(std::span<const Tile> seq);

/// Identifies left wall i with right wall i and suppresses identified
/// vertices left at degree 2.
Multigraph cyclize(const Tile& t);
/// Cyclization of a cyclically-compatible sequence, identifying all seams at once.
Multigraph cyclize(std::span<const Tile> seq);

/// Zip product at degree-3 vertices. `pairing[j]` is the index (into the
/// ascending-id neighbour list of v2) matched with the j-th neighbour of v1.
struct ZipLabels {
  std::string left_prefix = "1.";
  std::string right_prefix = "2.";
};

Multigraph zip(const Multigraph& g1, VertexId v1, const Multigraph& g2, VertexId v2,
               std::array<int, 3> pairing = {0, 1, 2}, const ZipLabels& labels = {});

/// True when v is a legal zip vertex: degree 3, simple incident edges, G - v connected.
bool zippable(const Multigraph& g, VertexId v);

}  // namespace cckit
