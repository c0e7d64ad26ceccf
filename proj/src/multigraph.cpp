#include "cckit/multigraph.hpp"

#include <deque>
#include <sstream>

namespace cckit {

VertexId Multigraph::add_vertex(std::string label, std::string role) {
  if (index_.contains(label)) throw InvalidInput("duplicate vertex label '" + label + "'");
  VertexId v = labels_.size();
  index_.emplace(label, v);
  labels_.push_back(std::move(label));
  roles_.push_back(std::move(role));
  adj_.emplace_back();
  return v;
}

void Multigraph::add_edge(VertexId u, VertexId v, int multiplicity) {
  if (u >= labels_.size() || v >= labels_.size()) throw InvalidInput("edge endpoint is not a vertex");
  if (u == v) throw InvalidInput("loop at vertex '" + labels_[u] + "'");
  if (multiplicity <= 0) throw InvalidInput("edge multiplicity must be positive");
  adj_[u][v] += multiplicity;
  adj_[v][u] += multiplicity;
  edge_count_ += static_cast<std::size_t>(multiplicity);
}

void Multigraph::add_edge(std::string_view u, std::string_view v, int multiplicity) {
  add_edge(id(u), id(v), multiplicity);
}

void Multigraph::remove_edge(VertexId u, VertexId v, int count) {
  auto it = adj_.at(u).find(v);
  if (it == adj_[u].end() || it->second < count) {
    throw InvalidInput("cannot remove missing edge " + labels_[u] + "-" + labels_[v]);
  }
  it->second -= count;
  adj_[v][u] -= count;
  if (it->second == 0) {
    adj_[u].erase(v);
    adj_[v].erase(u);
  }
  edge_count_ -= static_cast<std::size_t>(count);
}

std::size_t Multigraph::bundle_count() const {
  std::size_t total = 0;
  for (const auto& nb : adj_) total += nb.size();
  return total / 2;
}

std::optional<VertexId> Multigraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Multigraph::id(std::string_view label) const {
  auto v = find(label);
  if (!v) throw InvalidInput("unknown vertex '" + std::string(label) + "'");
  return *v;
}

int Multigraph::degree(VertexId v) const {
  int d = 0;
  for (const auto& [w, k] : adj_.at(v)) d += k;
  return d;
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
  const auto& nb = adj_.at(u);
  auto it = nb.find(v);
  return it == nb.end() ? 0 : it->second;
}

std::vector<EdgeBundle> Multigraph::bundles() const {
  std::vector<EdgeBundle> out;
  for (VertexId u = 0; u < adj_.size(); ++u) {
    for (const auto& [v, k] : adj_[u]) {
      if (u < v) out.push_back({u, v, k});
    }
  }
  return out;
}

bool Multigraph::is_simple() const {
  for (const auto& nb : adj_) {
    for (const auto& [v, k] : nb) {
      if (k > 1) return false;
    }
  }
  return true;
}

bool Multigraph::is_connected() const {
  if (labels_.empty()) return true;
  std::vector<bool> seen(labels_.size(), false);
  std::deque<VertexId> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (const auto& [v, k] : adj_[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  return reached == labels_.size();
}

Multigraph Multigraph::without_vertices(const std::vector<bool>& removed,
                                        std::vector<std::optional<VertexId>>* remap) const {
  Multigraph out;
  std::vector<std::optional<VertexId>> map(labels_.size());
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (v < removed.size() && removed[v]) continue;
    map[v] = out.add_vertex(labels_[v], roles_[v]);
  }
  for (VertexId u = 0; u < adj_.size(); ++u) {
    if (!map[u]) continue;
    for (const auto& [v, k] : adj_[u]) {
      if (u < v && map[v]) out.add_edge(*map[u], *map[v], k);
    }
  }
  if (remap) *remap = std::move(map);
  return out;
}

bool operator==(const Multigraph& a, const Multigraph& b) {
  return a.labels_ == b.labels_ && a.adj_ == b.adj_;
}

std::size_t DegreeHistogram::vertex_count() const {
  std::size_t n = 0;
  for (const auto& [d, c] : counts) n += c;
  return n;
}

long long DegreeHistogram::degree_sum() const {
  long long s = 0;
  for (const auto& [d, c] : counts) s += static_cast<long long>(d) * static_cast<long long>(c);
  return s;
}

Rational DegreeHistogram::average() const {
  auto n = vertex_count();
  if (n == 0) throw InvalidInput("average degree of an empty graph");
  return Rational(degree_sum(), static_cast<std::int64_t>(n));
}

std::size_t DegreeHistogram::count(int degree) const {
  auto it = counts.find(degree);
  return it == counts.end() ? 0 : it->second;
}

DegreeHistogram& DegreeHistogram::operator+=(const DegreeHistogram& other) {
  for (const auto& [d, c] : other.counts) counts[d] += c;
  return *this;
}

std::string DegreeHistogram::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [d, c] : counts) {
    if (!first) os << ", ";
    first = false;
    os << d << ": " << c;
  }
  os << '}';
  return os.str();
}

DegreeHistogram degree_histogram(const Multigraph& g) {
  DegreeHistogram h;
  for (VertexId v = 0; v < g.vertex_count(); ++v) ++h.counts[g.degree(v)];
  return h;
}

Rational average_degree(const Multigraph& g) { return degree_histogram(g).average(); }

Multigraph suppress_degree_two(const Multigraph& g, const std::vector<bool>& keep) {
  Multigraph work = g;
  std::vector<bool> removed(g.vertex_count(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < work.vertex_count(); ++v) {
      if (removed[v] || (v < keep.size() && keep[v])) continue;
      const auto& nb = work.neighbors(v);
      if (nb.size() != 2) continue;
      auto it = nb.begin();
      auto [a, ka] = *it++;
      auto [b, kb] = *it;
      if (ka != 1 || kb != 1) continue;
      work.remove_edge(v, a);
      work.remove_edge(v, b);
      work.add_edge(a, b);
      removed[v] = true;
      changed = true;
    }
  }
  return work.without_vertices(removed);
}

}  // namespace cckit
