// cckit: generate, verify and plan crossing-critical graph families.
#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cckit/crossing.hpp"
#include "cckit/generators.hpp"
#include "cckit/graph_io.hpp"
#include "cckit/planarity.hpp"
#include "cckit/planner.hpp"
#include "cckit/verify.hpp"

using namespace cckit;
using nlohmann::json;

namespace {

enum Exit { pass = 0, check_failed = 1, infeasible_plan = 2, budget_exceeded = 3, bad_input = 4 };

struct FamilyArgs {
  int l = 1;
  int n = 3;
  int m = 3;
};

struct PlanArgs {
  std::string degrees;
  std::string avg;
  long long k = 0;
  bool simple = false;
  long long member = 1;
};

json histogram_json(const DegreeHistogram& h) { return to_json(h); }

json graph_summary(const Multigraph& g) {
  auto h = degree_histogram(g);
  json j{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"simple", g.is_simple()},
         {"histogram", histogram_json(h)}};
  if (g.vertex_count() > 0) j["average_degree"] = h.average().str();
  return j;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

PlanResult run_planner(const PlanArgs& a) {
  std::optional<Rational> r;
  if (!a.avg.empty()) r = Rational::parse(a.avg);
  if (a.degrees.empty()) {
    if (!r) throw InvalidInput("plan needs --degrees, --avg or both");
    if (a.k != 0 && a.k != 2) throw InvalidInput("without --degrees only k = 2 plans are available");
    return plan_2cc_average(*r, a.simple, a.member);
  }
  auto D = parse_degrees(a.degrees);
  if (a.simple || a.k == 2) {
    if (a.k != 0 && a.k != 2) throw InvalidInput("--simple plans are 2-crossing-critical; --k must be 2");
    return plan_2cc_D(D, r, a.simple, a.member);
  }
  return plan_general(D, r, a.k);
}

// Realizes a concrete recipe and compares the result with what it claims.
json execute_and_check(const FamilyRecipe& rec, bool& ok, Multigraph* out = nullptr) {
  Multigraph g = execute_recipe(rec);
  auto h = degree_histogram(g);
  json j = graph_summary(g);
  std::set<int> got;
  for (auto [d, c] : h.counts) got.insert(d);
  bool hist_ok = rec.claimed_histogram && *rec.claimed_histogram == h;
  bool avg_ok = rec.claimed_r && *rec.claimed_r == h.average();
  bool degrees_ok = got == rec.claimed_D;
  bool k_ok = true;
  long long ksum = 0;
  for (const auto& c : rec.components) ksum += c.k * c.multiplicity;
  k_ok = ksum == rec.claimed_k;
  j["checks"] = {{"histogram", hist_ok}, {"average", avg_ok}, {"degree_set", degrees_ok}, {"k_sum", k_ok}};
  ok = hist_ok && avg_ok && degrees_ok && k_ok;
  if (out) *out = std::move(g);
  return j;
}

int cmd_generate(const std::string& family, const FamilyArgs& fa, const PlanArgs& pa, const std::string& format,
                 std::string prefix) {
  GraphFormat f = parse_format(format);
  json prov{{"schema", "cckit.generate/1"}, {"family", family}};
  Multigraph g;
  if (family == "staircase") {
    g = staircase_strip(fa.n, fa.m);
    auto c = staircase_claim(fa.n, fa.m);
    prov["params"] = {{"n", fa.n}, {"m", fa.m}};
    prov["claimed_k"] = c.claimed_k;
    prov["threshold_m"] = c.threshold_m;
    prov["criticality_threshold_met"] = c.criticality_claimed;
  } else if (family == "g") {
    g = g_graph(fa.l, fa.n, fa.m);
    prov["params"] = {{"l", fa.l}, {"n", fa.n}, {"m", fa.m}};
    if (fa.l >= 1) {
      auto c = g_claim(fa.l, fa.n, fa.m);
      prov["claimed_k"] = c.claimed_k;
      prov["threshold_m"] = c.threshold_m;
      prov["criticality_threshold_met"] = c.criticality_claimed;
    } else {
      auto c = staircase_claim(fa.n, 3 * fa.m);
      prov["claimed_k"] = c.claimed_k;
      prov["note"] = "l = 0 gives the staircase strip S(n, 3m)";
    }
  } else if (family == "k33") {
    g = k33();
    prov["claimed_k"] = 1;
    prov["criticality_threshold_met"] = true;
  } else if (family == "recipe") {
    PlanResult p = run_planner(pa);
    if (!p) {
      std::cout << json{{"schema", "cckit.generate/1"}, {"feasible", false}, {"reason", p.reason}}.dump(2) << "\n";
      return infeasible_plan;
    }
    bool ok = false;
    prov["recipe"] = to_json(*p.recipe);
    prov["execution"] = execute_and_check(*p.recipe, ok, &g);
    if (!ok) {
      std::cout << prov.dump(2) << "\n";
      return check_failed;
    }
  } else {
    throw InvalidInput("unknown family '" + family + "' (staircase, g, k33, recipe)");
  }
  if (prefix.empty()) prefix = family;
  std::string text = serialize(g, f);  // throws for graph6 of a multigraph before anything is written
  std::string graph_path = prefix + format_extension(f);
  write_text_file(graph_path, text);
  prov["graph"] = graph_summary(g);
  prov["format"] = format;
  prov["output"] = {{"graph", graph_path}, {"provenance", prefix + ".json"}};
  write_text_file(prefix + ".json", prov.dump(2) + "\n");
  std::cout << prov.dump(2) << "\n";
  return pass;
}

struct Target {
  Multigraph graph;
  std::optional<Tile> tile;
  std::optional<FamilyClaim> claim;
  std::string family;
};

Target load_target(const std::string& family, const std::string& file, const FamilyArgs& fa) {
  Target t;
  if (!file.empty() && !family.empty()) throw InvalidInput("give either --family or --file");
  if (!file.empty()) {
    t.graph = read_graph_file(file);
    return t;
  }
  t.family = family;
  if (family == "staircase") {
    t.graph = staircase_strip(fa.n, fa.m);
    t.tile = staircase_tile(fa.n);
    t.claim = staircase_claim(fa.n, fa.m);
  } else if (family == "g") {
    t.graph = g_graph(fa.l, fa.n, fa.m);
    t.tile = g_tile(fa.l, fa.n);
    if (fa.l >= 1) t.claim = g_claim(fa.l, fa.n, fa.m);
  } else if (family == "k33") {
    t.graph = k33();
    t.claim = k33_claim();
  } else if (family == "k5") {
    t.graph = k5();
    t.claim = FamilyClaim{"k5", 0, 0, 0, 1, 0, true};
  } else {
    throw InvalidInput(family.empty() ? "verify needs --family or --file"
                                      : "unknown family '" + family + "'");
  }
  return t;
}

int worst(int a, int b) {
  auto rank = [](int c) { return c == bad_input ? 3 : c == budget_exceeded ? 2 : c == check_failed ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

int cmd_verify(const std::string& family, const std::string& file, const FamilyArgs& fa,
               const std::vector<std::string>& checks, long long k_opt, std::uint64_t budget, json& report) {
  Target t = load_target(family, file, fa);
  report["target"] = file.empty() ? json{{"family", family}, {"l", fa.l}, {"n", fa.n}, {"m", fa.m}}
                                  : json{{"file", file}};
  report["graph"] = graph_summary(t.graph);
  report["oracle_budget"] = budget;
  long long k = k_opt > 0 ? k_opt : (t.claim ? t.claim->claimed_k : 0);
  if (t.claim) report["claimed_k"] = t.claim->claimed_k;
  int code = pass;
  json results = json::object();
  for (const auto& name : checks) {
    auto t0 = std::chrono::steady_clock::now();
    json r;
    int c = pass;
    if (name == "planarity") {
      bool g_planar = is_planar(t.graph);
      r["graph_planar"] = g_planar;
      if (t.tile) {
        bool tp = tile_planar(*t.tile);
        r["tile_planar"] = tp;
        r["verdict"] = tp;
        c = tp ? pass : check_failed;
      } else {
        r["verdict"] = g_planar;
        c = g_planar ? pass : check_failed;
      }
    } else if (name == "perfect") {
      if (!t.tile) throw InvalidInput("perfect needs a tile family (staircase or g)");
      auto p = is_perfect(*t.tile);
      r = {{"verdict", p.perfect()},
           {"equal_walls", p.equal_walls},
           {"walls_removable", p.walls_removable},
           {"wall_reachability", p.wall_reachability},
           {"disjoint_pairs", p.disjoint_pairs},
           {"disjoint_pairs_vertex_strict",
            p.disjoint_pairs_strict ? json(*p.disjoint_pairs_strict) : json("unknown")},
           {"witnesses", p.witnesses}};
      c = p.perfect() ? pass : (p.search_exhausted ? budget_exceeded : check_failed);
    } else if (name == "certificate") {
      if (t.family != "g" || fa.l < 1) throw InvalidInput("certificate needs --family g with l >= 1");
      auto ps = path_system(fa.l, fa.n, fa.m);
      long long expected = static_cast<long long>(fa.l) * fa.l + 2LL * fa.l * (fa.n - 1);
      try {
        long long lb = verify_twisted_family(ps.tile, ps.paths, ps.all_pairs());
        r = {{"verdict", lb == expected}, {"lower_bound", lb}, {"expected", expected}};
        c = lb == expected ? pass : check_failed;
      } catch (const CertificateError& e) {
        r = {{"verdict", false}, {"error", e.what()}};
        c = check_failed;
      }
    } else if (name == "cr") {
      if (k <= 0) throw InvalidInput("cr on a file needs --k (the largest value to search)");
      auto cn = crossing_number_exact(t.graph, k, budget);
      r["nodes"] = cn.nodes;
      if (cn.budget_exceeded) {
        r["verdict"] = "unknown";
        c = budget_exceeded;
      } else if (cn.value) {
        r["cr"] = *cn.value;
        r["verdict"] = !t.claim || *cn.value == k;
        c = (!t.claim || *cn.value == k) ? pass : check_failed;
      } else {
        r["cr_greater_than"] = k;
        r["verdict"] = false;
        c = check_failed;
      }
    } else if (name == "critical") {
      if (k <= 0) throw InvalidInput("critical on a file needs --k");
      auto cr = is_k_crossing_critical(t.graph, k, budget);
      r = {{"k", k}, {"verdict", to_string(cr.verdict)}, {"nodes", cr.nodes}};
      if (cr.lower_bound_failed) r["reason"] = "cr(G) < k";
      if (cr.witness_edge) {
        r["witness_edge"] = {t.graph.label(cr.witness_edge->u), t.graph.label(cr.witness_edge->v)};
      }
      if (t.claim && !t.claim->criticality_claimed) r["note"] = "m is below the proven criticality threshold";
      c = cr.verdict == Verdict::yes ? pass : cr.verdict == Verdict::no ? check_failed : budget_exceeded;
    } else if (name == "degrees") {
      auto h = degree_histogram(t.graph);
      r["histogram"] = histogram_json(h);
      if (t.family == "g") {
        auto d = check_degree_profile(fa.l, fa.n, fa.m);
        r["expected"] = histogram_json(d.expected);
        r["expected_average"] = d.expected_average.str();
        r["verdict"] = d.ok;
        c = d.ok ? pass : check_failed;
      } else if (t.family == "staircase") {
        DegreeHistogram e;
        e.counts[3] = static_cast<std::size_t>(fa.m) * static_cast<std::size_t>(4 * fa.n - 8);
        e.counts[4] = static_cast<std::size_t>(fa.m);
        r["expected"] = histogram_json(e);
        r["verdict"] = e == h;
        c = e == h ? pass : check_failed;
      } else {
        r["verdict"] = true;
      }
    } else {
      throw InvalidInput("unknown check '" + name + "'");
    }
    r["ms"] = ms_since(t0);
    results[name] = r;
    code = worst(code, c);
  }
  report["checks"] = results;
  return code;
}

int cmd_plan(const PlanArgs& pa, bool execute, const std::string& out, json& report) {
  report["parameters"] = {{"degrees", pa.degrees}, {"avg", pa.avg}, {"k", pa.k}, {"simple", pa.simple},
                          {"member", pa.member}};
  PlanResult p = run_planner(pa);
  if (!p) {
    report["feasible"] = false;
    report["reason"] = p.reason;
    return infeasible_plan;
  }
  report["feasible"] = true;
  json recipe = to_json(*p.recipe);
  report["recipe"] = recipe;
  if (!out.empty()) write_text_file(out, recipe.dump(2) + "\n");
  if (!execute) return pass;
  if (!p.recipe->concrete()) {
    report["execution"] = {{"executed", false}, {"reason", "recipe has components without a generator"}};
    return bad_input;
  }
  bool ok = false;
  report["execution"] = execute_and_check(*p.recipe, ok);
  report["execution"]["executed"] = true;
  return ok ? pass : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cckit: crossing-critical graph families"};
  app.require_subcommand(1);

  FamilyArgs fa;
  PlanArgs pa;
  std::string format = "edgelist";
  std::string out;
  std::string family;
  std::string file;
  std::string report_path;
  std::vector<std::string> checks{"planarity"};
  long long k_verify = 0;
  bool execute = false;
  std::uint64_t budget = default_oracle_budget();

  auto add_family = [&](CLI::App* c) {
    c->add_option("--l", fa.l, "H tile parameter l");
    c->add_option("--n", fa.n, "staircase width n");
    c->add_option("--m", fa.m, "number of tiles (odd)");
  };
  auto add_plan = [&](CLI::App* c) {
    c->add_option("--degrees", pa.degrees, "degree set, e.g. 3,4,9");
    c->add_option("--avg", pa.avg, "average degree p/q");
    c->add_option("--k", pa.k, "crossing number (0 = smallest admissible)");
    c->add_flag("--simple", pa.simple, "simple graphs only");
    c->add_option("--member", pa.member, "family member index (>= 1)");
  };

  auto* gen = app.add_subcommand("generate", "write a family member and its provenance");
  gen->add_option("family", family, "staircase | g | k33 | recipe")->required();
  add_family(gen);
  add_plan(gen);
  gen->add_option("--format", format, "graph6 | edgelist | dot");
  gen->add_option("--out", out, "output prefix");

  auto* ver = app.add_subcommand("verify", "run checks on a family member or a graph file");
  ver->add_option("--family", family, "staircase | g | k33 | k5");
  ver->add_option("--file", file, "graph file (.g6 or edge list)");
  add_family(ver);
  ver->add_option("--checks", checks, "planarity,perfect,certificate,cr,critical,degrees")->delimiter(',');
  ver->add_option("--k", k_verify, "k for cr / critical (defaults to the family claim)");
  ver->add_option("--budget", budget, "oracle node budget per call");
  ver->add_option("--report", report_path, "also write the JSON report here");

  auto* plan = app.add_subcommand("plan", "plan a family with prescribed degrees / average degree");
  add_plan(plan);
  plan->add_flag("--execute", execute, "build concrete recipes and re-check their claims");
  plan->add_option("--out", out, "write the recipe JSON here");
  plan->add_option("--report", report_path, "also write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? pass : bad_input;
  }

  json report{{"schema", "cckit.report/1"}};
  std::vector<std::string> argv_echo(argv, argv + argc);
  report["command"] = argv_echo;
  int code = pass;
  try {
    if (*gen) return cmd_generate(family, fa, pa, format, out);
    if (*ver) code = cmd_verify(family, file, fa, checks, k_verify, budget, report);
    if (*plan) code = cmd_plan(pa, execute, out, report);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: arithmetic overflow: " << e.what() << "\n";
    return bad_input;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return check_failed;
  }
  report["exit_code"] = code;
  std::cout << report.dump(2) << "\n";
  if (!report_path.empty()) write_text_file(report_path, report.dump(2) + "\n");
  return code;
}
