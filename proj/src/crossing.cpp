#include "cckit/crossing.hpp"

#include <cstdlib>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "cckit/planarity.hpp"

namespace cckit {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

std::uint64_t default_oracle_budget() {
  if (const char* env = std::getenv("CCKIT_ORACLE_BUDGET")) {
    try {
      auto v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return 20'000'000;
}

namespace {

struct Segment {
  VertexId u;
  VertexId v;
  std::size_t orig;
};

class Search {
 public:
  Search(const Multigraph& g, std::uint64_t budget) : budget_(budget), n_(g.vertex_count()) {
    orig_ = g.bundles();
    for (std::size_t i = 0; i < orig_.size(); ++i) segs_.push_back({orig_[i].u, orig_[i].v, i});
    const std::size_t m = orig_.size();
    // Candidate pairs: independent original edges, in a fixed order.
    for (std::size_t e = 0; e < m; ++e) {
      for (std::size_t f = e + 1; f < m; ++f) {
        const auto& a = orig_[e];
        const auto& b = orig_[f];
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
        pairs_.emplace_back(e, f);
      }
    }
  }

  Verdict run(long long k) { return rec(k, 0); }
  std::uint64_t nodes() const { return nodes_; }
  CrossingSet witness() const {
    CrossingSet cs;
    for (auto [e, f] : chosen_) {
      cs.pairs.emplace_back(orig_[e], orig_[f]);
      cs.weight += static_cast<long long>(orig_[e].multiplicity) * orig_[f].multiplicity;
    }
    return cs;
  }

 private:
  bool planar() const {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Graph bg(n_);
    for (const auto& s : segs_) boost::add_edge(s.u, s.v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
  }

  Verdict rec(long long k, std::size_t from) {
    if (++nodes_ > budget_) return Verdict::unknown;
    if (planar()) return Verdict::yes;
    if (k <= 0) return Verdict::no;
    bool gave_up = false;
    for (std::size_t p = from; p < pairs_.size(); ++p) {
      auto [e, f] = pairs_[p];
      long long cost = static_cast<long long>(orig_[e].multiplicity) * orig_[f].multiplicity;
      if (cost > k) continue;
      std::vector<std::size_t> se;
      std::vector<std::size_t> sf;
      for (std::size_t i = 0; i < segs_.size(); ++i) {
        if (segs_[i].orig == e) se.push_back(i);
        if (segs_[i].orig == f) sf.push_back(i);
      }
      for (std::size_t a : se) {
        for (std::size_t b : sf) {
          Segment sa = segs_[a];
          Segment sb = segs_[b];
          VertexId x = n_++;
          segs_[a] = {sa.u, x, e};
          segs_[b] = {sb.u, x, f};
          segs_.push_back({x, sa.v, e});
          segs_.push_back({x, sb.v, f});
          chosen_.emplace_back(e, f);
          Verdict r = rec(k - cost, p + 1);
          if (r == Verdict::yes) return r;
          chosen_.pop_back();
          segs_.pop_back();
          segs_.pop_back();
          segs_[a] = sa;
          segs_[b] = sb;
          --n_;
          if (r == Verdict::unknown) gave_up = true;
          if (nodes_ > budget_) return Verdict::unknown;
        }
      }
    }
    return gave_up ? Verdict::unknown : Verdict::no;
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t n_;
  std::vector<EdgeBundle> orig_;
  std::vector<Segment> segs_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::pair<std::size_t, std::size_t>> chosen_;
};

}  // namespace

OracleRun cr_leq(const Multigraph& g, long long k, std::uint64_t budget) {
  Search s(g, budget);
  OracleRun out;
  out.verdict = s.run(k);
  out.nodes = s.nodes();
  if (out.verdict == Verdict::yes) out.witness = s.witness();
  return out;
}

CrossingNumber crossing_number_exact(const Multigraph& g, long long k_max, std::uint64_t budget) {
  CrossingNumber out;
  for (long long k = 0; k <= k_max; ++k) {
    OracleRun r = cr_leq(g, k, budget);
    out.nodes += r.nodes;
    if (r.verdict == Verdict::yes) {
      out.value = k;
      out.witness = r.witness;
      return out;
    }
    if (r.verdict == Verdict::unknown) {
      out.budget_exceeded = true;
      return out;
    }
  }
  return out;
}

CriticalityRun is_k_crossing_critical(const Multigraph& g, long long k, std::uint64_t budget) {
  CriticalityRun out;
  if (k <= 0) throw InvalidInput("criticality needs k >= 1");
  OracleRun base = cr_leq(g, k - 1, budget);
  out.nodes += base.nodes;
  if (base.verdict == Verdict::unknown) return out;
  if (base.verdict == Verdict::yes) {
    out.verdict = Verdict::no;
    out.lower_bound_failed = true;
    return out;
  }
  for (const auto& e : g.bundles()) {
    Multigraph h = g;
    h.remove_edge(e.u, e.v);
    OracleRun r = cr_leq(h, k - 1, budget);
    out.nodes += r.nodes;
    if (r.verdict == Verdict::unknown) {
      out.verdict = Verdict::unknown;
      return out;
    }
    if (r.verdict == Verdict::no) {
      out.verdict = Verdict::no;
      out.witness_edge = e;
      return out;
    }
  }
  out.verdict = Verdict::yes;
  return out;
}

CrossingNumber tile_crossing_number(const Tile& t, long long k_max, std::uint64_t budget) {
  return crossing_number_exact(framed_graph(t, static_cast<int>(k_max + 1)), k_max, budget);
}

}  // namespace cckit
