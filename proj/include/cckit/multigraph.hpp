#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cckit/rational.hpp"

namespace cckit {

using VertexId = std::size_t;

/// Raised for malformed input: bad parameters, invalid graphs, broken preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EdgeBundle {
  VertexId u;
  VertexId v;
  int multiplicity;
};

/// Loop-free multigraph with stable string labels.
///
/// Vertices are dense ids 0..n-1, each carrying a unique label and an
/// optional role annotation. Parallel edges are stored as a multiplicity
/// on the unordered pair. Degree counts every parallel edge separately.
class Multigraph {
 public:
  Multigraph() = default;

  VertexId add_vertex(std::string label, std::string role = {});
  void add_edge(VertexId u, VertexId v, int multiplicity = 1);
  void add_edge(std::string_view u, std::string_view v, int multiplicity = 1);
  /// Removes `count` parallel copies of uv; throws if fewer are present.
  void remove_edge(VertexId u, VertexId v, int count = 1);

  std::size_t vertex_count() const { return labels_.size(); }
  /// Number of edges counting multiplicity.
  std::size_t edge_count() const { return edge_count_; }
  /// Number of distinct adjacent pairs.
  std::size_t bundle_count() const;

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::string& role(VertexId v) const { return roles_.at(v); }
  void set_role(VertexId v, std::string role) { roles_.at(v) = std::move(role); }
  std::optional<VertexId> find(std::string_view label) const;
  /// Like find(), but throws InvalidInput for unknown labels.
  VertexId id(std::string_view label) const;

  int degree(VertexId v) const;
  int multiplicity(VertexId u, VertexId v) const;
  const std::map<VertexId, int>& neighbors(VertexId v) const { return adj_.at(v); }
  std::vector<EdgeBundle> bundles() const;
  bool is_simple() const;
  bool is_connected() const;

  /// Copy of the graph without the flagged vertices; surviving vertices keep
  /// their labels and relative order. `remap`, when given, receives the old->new id map.
  Multigraph without_vertices(const std::vector<bool>& removed,
                              std::vector<std::optional<VertexId>>* remap = nullptr) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b);

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> roles_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::map<VertexId, int>> adj_;
  std::size_t edge_count_ = 0;
};

/// Degree -> number of vertices with that degree.
struct DegreeHistogram {
  std::map<int, std::size_t> counts;

  std::size_t vertex_count() const;
  long long degree_sum() const;
  /// Exact average degree; throws InvalidInput for an empty histogram.
  Rational average() const;
  std::size_t count(int degree) const;

  DegreeHistogram& operator+=(const DegreeHistogram& other);
  friend bool operator==(const DegreeHistogram&, const DegreeHistogram&) = default;
  std::string str() const;
};

DegreeHistogram degree_histogram(const Multigraph& g);
Rational average_degree(const Multigraph& g);

/// Replaces degree-2 vertices (outside `keep`) by an edge between their two
/// distinct neighbours until none is left. A degree-2 vertex whose two edges go
/// to the same neighbour is kept, since contracting it would create a loop.
Multigraph suppress_degree_two(const Multigraph& g, const std::vector<bool>& keep = {});

}  // namespace cckit
