#include "cckit/planner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cckit/diophantine.hpp"
#include "cckit/generators.hpp"
#include "cckit/tile.hpp"

namespace cckit {

namespace {

TileCard make_card(std::string id, long long a, long long b, bool simple, bool verified,
                   std::string note = {}) {
  return TileCard{std::move(id), {Rational(a), Rational(b)}, simple, verified, std::move(note)};
}

TileCard composite(std::string id, std::initializer_list<const char*> parts) {
  TileCard c;
  c.id = std::move(id);
  c.ch = {Rational(0), Rational(0)};
  c.simple = true;
  c.verified = true;
  std::string note = "join of";
  for (const char* p : parts) {
    const TileCard& t = card(p);
    c.ch += t.ch;
    c.simple = c.simple && t.simple;
    c.verified = c.verified && t.verified;
    note += std::string(" ") + p;
  }
  c.note = note;
  return c;
}

long long lcm_ll(long long a, long long b) {
  __int128 v = static_cast<__int128>(a / std::gcd(a, b)) * b;
  return checked_narrow(v);
}

PlanResult infeasible(std::string why) { return PlanResult{std::nullopt, std::move(why)}; }

RecipeComponent card_component(const TileCard& c, long long count) {
  RecipeComponent rc;
  rc.kind = "card";
  rc.id = c.id;
  rc.multiplicity = count;
  rc.ch = c.ch;
  rc.average = c.ch.density();
  rc.extra["verified"] = c.verified;
  rc.extra["simple"] = c.simple;
  if (!c.note.empty()) rc.extra["note"] = c.note;
  return rc;
}

}  // namespace

const std::vector<TileCard>& card_catalog() {
  static const std::vector<TileCard> catalog = [] {
    std::vector<TileCard> v{
        make_card("T_a", 5, 16, true, true),
        make_card("T_b", 5, 18, true, true),
        make_card("T_c", 4, 16, true, true),
        make_card("T_d", 4, 16, true, true),
        make_card("T_e", 3, 14, false, true),
        make_card("T_f", 2, 9, false, false, "only the density 9/2 is known; (2,9) is a representative"),
        make_card("T_g", 5, 18, true, false, "only the density 18/5 is known; (5,18) is a representative"),
        make_card("T_n", 4, 15, false, false, "only the density 15/4 is known; (4,15) is a representative"),
        make_card("T_p", 3, 11, false, false, "only the density 11/3 is known; (3,11) is a representative"),
    };
    return v;
  }();
  return catalog;
}

const TileCard& card(std::string_view id) {
  for (const auto& c : card_catalog()) {
    if (c.id == id) return c;
  }
  static const std::vector<TileCard> composites = [] {
    return std::vector<TileCard>{
        composite("T_ba", {"T_b", "T_a"}),
        composite("T_cd", {"T_c", "T_d"}),
        composite("T_cdd", {"T_c", "T_d", "T_d"}),
        composite("T_bab", {"T_b", "T_a", "T_b"}),
    };
  }();
  for (const auto& c : composites) {
    if (c.id == id) return c;
  }
  throw InvalidInput("unknown tile card '" + std::string(id) + "'");
}

Rational seq_average_degree(const std::vector<CardCount>& cards) {
  if (cards.empty()) throw InvalidInput("average degree of an empty card list");
  Rational a(0);
  Rational b(0);
  for (const auto& [c, k] : cards) {
    if (k < 1) throw InvalidInput("card multiplicity must be >= 1");
    a += c.ch.a * Rational(k);
    b += c.ch.b * Rational(k);
  }
  return b / a;
}

IntervalMix solve_interval_mix(const TileCard& c1, const TileCard& c2, Rational r) {
  const Rational d1 = c1.ch.density();
  const Rational d2 = c2.ch.density();
  if (d1 > d2) throw InvalidInput("cards must be given in order of increasing density");
  IntervalMix out;
  if (r < d1 || r > d2) {
    out.reason = "r = " + r.str() + " outside [" + d1.str() + ", " + d2.str() + "]";
    return out;
  }
  out.feasible = true;
  if (r == d1) {
    out.single_card = true;
    out.k1 = 1;
    return out;
  }
  if (r == d2) {
    out.single_card = true;
    out.k2 = 1;
    return out;
  }
  const Rational p(r.num());
  const Rational q(r.den());
  Rational k1 = q * c2.ch.b - p * c2.ch.a;
  Rational k2 = p * c1.ch.a - q * c1.ch.b;
  long long scale = lcm_ll(k1.den(), k2.den());
  long long i1 = (k1 * Rational(scale)).num();
  long long i2 = (k2 * Rational(scale)).num();
  long long g = std::gcd(i1, i2);
  out.k1 = i1 / g;
  out.k2 = i2 / g;
  if (out.k1 <= 0 || out.k2 <= 0) throw std::logic_error("interval mix produced a nonpositive count");
  return out;
}

bool FamilyRecipe::concrete() const {
  return !components.empty() &&
         std::all_of(components.begin(), components.end(), [](const auto& c) { return c.concrete; });
}

Rational recompute_average(const FamilyRecipe& r) {
  if (r.components.empty()) throw InvalidInput("empty recipe");
  bool cards = std::all_of(r.components.begin(), r.components.end(),
                           [](const auto& c) { return c.ch.has_value(); });
  if (cards) {
    Rational a(0);
    Rational b(0);
    for (const auto& c : r.components) {
      a += c.ch->a * Rational(c.multiplicity);
      b += c.ch->b * Rational(c.multiplicity);
    }
    return b / a;
  }
  Rational v(0);
  Rational s(0);
  for (const auto& c : r.components) {
    if (!c.vertices || !c.degree_sum) throw InvalidInput("recipe component " + c.id + " has no counting data");
    v += *c.vertices * Rational(c.multiplicity);
    s += *c.degree_sum * Rational(c.multiplicity);
  }
  v -= Rational(2 * r.zips);
  s -= Rational(6 * r.zips);
  return s / v;
}

// ---------------------------------------------------------------------------
// 2-crossing-critical planners

PlanResult plan_2cc_average(Rational r, bool simple, long long member) {
  if (member < 1) throw InvalidInput("family member index must be >= 1");
  const long long f = 2 * member - 1;
  const Rational lo(16, 5);
  const Rational hi = simple ? Rational(4) : Rational(14, 3);
  if (r < lo || r > hi) {
    return infeasible("r = " + r.str() + " outside [" + lo.str() + ", " + hi.str() + "]" +
                      (simple ? " (simple)" : ""));
  }
  FamilyRecipe rec;
  rec.planner = "2cc_average";
  rec.claimed_k = 2;
  rec.claimed_r = r;
  rec.simple = simple;
  rec.universality = "";
  if (r == lo || r == hi) {
    const TileCard& c = card(r == lo ? "T_a" : (simple ? "T_c" : "T_e"));
    rec.components.push_back(card_component(c, 2 * member + 1));
    rec.ordering = "single card, alternately inverted";
    rec.simple = c.simple;
  } else {
    // Rescale (p, q) by the least factor making all counts positive:
    // s*q*(96-24r) > 4 and s*q*(30r-96) > 5 (simple), likewise for the general scheme.
    const Rational qq(r.den());
    const Rational b1 = simple ? Rational(4) / (qq * (Rational(96) - Rational(24) * r))
                               : Rational(4) / (qq * (Rational(112) - Rational(24) * r));
    const Rational b2 = simple ? Rational(5) / (qq * (Rational(30) * r - Rational(96)))
                               : Rational(8) / (qq * (Rational(40) * r - Rational(128)));
    auto above = [](const Rational& x) { return x.num() / x.den() + 1; };
    const long long sc = std::max(above(b1), above(b2));
    const long long p = checked_narrow(static_cast<__int128>(sc) * r.num());
    const long long q = checked_narrow(static_cast<__int128>(sc) * r.den());
    std::vector<std::pair<const char*, long long>> counts;
    long long length = 0;
    if (simple) {
      counts = {{"T_a", (96 * q - 24 * p - 4) * f}, {"T_b", 8 * f}, {"T_c", (30 * p - 96 * q - 5) * f}};
      length = (6 * p - 1) * f;
    } else {
      counts = {{"T_a", (112 * q - 24 * p - 4) * f}, {"T_c", 11 * f}, {"T_e", (40 * p - 128 * q - 8) * f}};
      length = (16 * p - 16 * q - 1) * f;
    }
    long long total = 0;
    for (auto [id, k] : counts) {
      rec.components.push_back(card_component(card(id), k));
      total += k;
    }
    if (total != length || length % 2 == 0) throw std::logic_error("sequence length is not the expected odd number");
    rec.ordering = "blocks in the listed order, alternately inverted";
    rec.certificate["p"] = p;
    rec.certificate["q"] = q;
    rec.certificate["length"] = length;
  }
  Rational sa(0);
  Rational sb(0);
  for (const auto& c : rec.components) {
    sa += c.ch->a * Rational(c.multiplicity);
    sb += c.ch->b * Rational(c.multiplicity);
  }
  rec.certificate["sum_a"] = sa.str();
  rec.certificate["sum_b"] = sb.str();
  if (recompute_average(rec) != r) throw std::logic_error("2cc recipe does not reproduce r");
  return PlanResult{std::move(rec), {}};
}

bool degree_set_feasible_2cc(const std::set<int>& D, bool simple) {
  if (D.size() < 2) return false;
  for (int d : D) {
    if (d < 3 || d > 6) return false;
  }
  if (simple) return D.contains(3);
  return D.contains(3) || D.contains(4);
}

bool Interval::contains(const Rational& r) const {
  if (empty) return false;
  if (r < lo || r > hi) return false;
  if (r == lo && !lo_closed) return false;
  if (r == hi && !hi_closed) return false;
  return true;
}

std::string Interval::str() const {
  if (empty) return "{}";
  if (lo == hi) return "{" + lo.str() + "}";
  return std::string(lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() + (hi_closed ? "]" : ")");
}

namespace {

struct TableRow {
  std::set<int> D;
  Interval simple;
  const char* s1;
  const char* s2;
  const char* s_case;
  Interval general;
  const char* g1;
  const char* g2;
  const char* g_case;
};

Interval iv(Rational lo, bool lc, Rational hi, bool hc) { return Interval{false, lo, hi, lc, hc}; }
Interval pt(Rational x) { return Interval{false, x, x, true, true}; }
Interval none() { return Interval{}; }

const std::vector<TableRow>& table() {
  static const std::vector<TableRow> rows = [] {
    const Rational r16_5(16, 5), r17_5(17, 5), r18_5(18, 5), r15_4(15, 4), r11_3(11, 3), r9_2(9, 2),
        r14_3(14, 3), four(4);
    return std::vector<TableRow>{
        {{3, 4}, iv(r16_5, true, r18_5, true), "T_a", "T_g", "iii", iv(r16_5, true, r15_4, true), "T_a", "T_n", "iii"},
        {{3, 5}, pt(r17_5), "T_a", "T_b", "iv", iv(r17_5, true, r11_3, true), "T_ba", "T_p", "iii"},
        {{3, 6}, pt(r18_5), "T_b", "T_b", "i", pt(r18_5), "T_b", "T_b", "i"},
        {{4, 5}, none(), "", "", "", pt(r9_2), "T_f", "T_f", "i"},
        {{4, 6}, none(), "", "", "", pt(r14_3), "T_e", "T_e", "i"},
        {{3, 4, 5}, iv(r16_5, false, four, true), "T_a", "T_d", "iii'", iv(r16_5, false, r9_2, false), "T_a", "T_f", "iii"},
        {{3, 4, 6}, iv(r16_5, false, four, true), "T_a", "T_cd", "iii'", iv(r16_5, false, r14_3, false), "T_a", "T_e", "iii"},
        {{3, 5, 6}, iv(r17_5, false, r18_5, false), "T_a", "T_b", "iv", iv(r17_5, false, r11_3, false), "T_bab", "T_p", "iii"},
        {{4, 5, 6}, none(), "", "", "", iv(r9_2, false, r14_3, false), "T_f", "T_e", "iii"},
        {{3, 4, 5, 6}, iv(r16_5, false, four, true), "T_a", "T_cdd", "iii'", iv(r16_5, false, r14_3, false), "T_a", "T_e", "iii"},
    };
  }();
  return rows;
}

const TableRow* find_row(const std::set<int>& D) {
  for (const auto& row : table()) {
    if (row.D == D) return &row;
  }
  return nullptr;
}

std::string ordering_for(const std::string& c, long long k1, long long k2) {
  if (c == "iii") return "iii: blocks T1^(k1*l) then T2^(k2*l)";
  if (c == "iii'") return "iii: paired reorder (T1,T1,T2,T2,...) ending in the majority tile";
  if (c == "iv") {
    if (k1 > k2) return "iv: U1 = (T1,T2,...,T1,T2,T1,...,T1)";
    if (k1 < k2) return "iv: U2 = (T1,T2,...,T1,T2,T2,...,T2)";
    return "iv: U0 = (T1,T2,...,T1,T2)";
  }
  return "i: single card";
}

}  // namespace

std::optional<Interval> average_interval_2cc(const std::set<int>& D, bool simple) {
  const TableRow* row = find_row(D);
  if (!row) return std::nullopt;
  return simple ? row->simple : row->general;
}

PlanResult plan_2cc_D(const std::set<int>& D, std::optional<Rational> r, bool simple, long long member) {
  if (member < 1) throw InvalidInput("family member index must be >= 1");
  if (D.empty()) throw InvalidInput("empty degree set");
  if (!degree_set_feasible_2cc(D, simple)) {
    return infeasible("no 3-connected 2-crossing-critical " + std::string(simple ? "simple " : "") +
                      "D-max-universal family exists for D = " + degrees_str(D));
  }
  FamilyRecipe rec;
  rec.planner = "2cc_degrees";
  rec.claimed_k = 2;
  rec.claimed_D = D;
  rec.universality = "D-max-universal";
  rec.simple = simple;
  const long long m = member;

  if (!r) {
    // Sequences T(D, m) of length 2m+1 (4m+1 for {3,5,6}).
    std::vector<std::pair<const char*, long long>> seq;
    const std::map<std::set<int>, std::vector<std::pair<const char*, long long>>> patterns{
        {{3, 4}, {{"T_a", 2 * m + 1}}},
        {{3, 5}, {{"T_a", m + 1}, {"T_b", m}}},
        {{3, 6}, {{"T_b", 2 * m + 1}}},
        {{3, 4, 5}, {{"T_a", m + 1}, {"T_d", m}}},
        {{3, 4, 6}, {{"T_c", m + 1}, {"T_d", m}}},
        {{3, 4, 5, 6}, {{"T_c", m + 1}, {"T_b", m}}},
        {{3, 5, 6}, {{"T_a", m + 1}, {"T_b", 3 * m}}},
        {{4, 5}, {{"T_f", 2 * m + 1}}},
        {{4, 6}, {{"T_e", 2 * m + 1}}},
        {{4, 5, 6}, {{"T_e", m + 1}, {"T_f", m}}},
    };
    for (auto [id, k] : patterns.at(D)) rec.components.push_back(card_component(card(id), k));
    rec.ordering = D == std::set<int>{3, 5, 6}
                       ? "T(3,5,m) with ^T(3,6,m)^ inserted in place of one ^T_b^"
                       : "alternating T1, ^T2^, T1, ..., T1";
    rec.simple = std::all_of(rec.components.begin(), rec.components.end(),
                             [](const auto& c) { return c.extra.value("simple", false); });
    rec.claimed_r = recompute_average(rec);
    return PlanResult{std::move(rec), {}};
  }

  const TableRow* row = find_row(D);
  Interval range = simple ? row->simple : row->general;
  if (!range.contains(*r)) {
    return infeasible("r = " + r->str() + " outside " + std::string(simple ? "I_D^s" : "I_D") + " = " +
                      range.str() + " for D = " + degrees_str(D));
  }
  rec.claimed_r = *r;

  std::string t1 = simple ? row->s1 : row->g1;
  std::string t2 = simple ? row->s2 : row->g2;
  std::string c = simple ? row->s_case : row->g_case;
  bool simple_route = simple;
  // {3,5,6} general: the simple construction below 18/5, T_bab/T_p above.
  if (!simple && D == std::set<int>{3, 5, 6} && *r < Rational(18, 5)) {
    t1 = row->s1;
    t2 = row->s2;
    c = row->s_case;
    simple_route = true;
  }
  const TileCard& c1 = card(t1);
  const TileCard& c2 = card(t2);
  rec.certificate["T1"] = t1;
  rec.certificate["T2"] = t2;

  long long n1 = 0;
  long long n2 = 0;
  if (t1 == t2) {
    n1 = 2 * m + 1;
    rec.ordering = "i: single card";
  } else {
    IntervalMix mix = solve_interval_mix(c1, c2, *r);
    if (!mix.feasible) return infeasible(mix.reason);
    if (mix.single_card) {
      (mix.k1 ? n1 : n2) = 2 * m + 1;
      rec.ordering = "i: single card at the closed end";
    } else {
      n1 = mix.k1 * m;
      n2 = mix.k2 * m;
      rec.ordering = ordering_for(c, mix.k1, mix.k2);
      rec.certificate["k1"] = mix.k1;
      rec.certificate["k2"] = mix.k2;
    }
  }
  if (n1 > 0) rec.components.push_back(card_component(c1, n1));
  if (n2 > 0) rec.components.push_back(card_component(c2, n2));
  if ((n1 + n2) % 2 == 0) {
    // Parity fix: one extra tile U_0 of average r (a whole odd sequence joined).
    PlanResult u0 = plan_2cc_average(*r, simple_route);
    if (!u0) return infeasible("no U_0 tile for the parity fix: " + u0.reason);
    RecipeComponent rc;
    rc.kind = "card";
    rc.id = "U_0";
    rc.multiplicity = 1;
    DensityCharacteristics ch{Rational(0), Rational(0)};
    nlohmann::json parts = nlohmann::json::array();
    bool u0_simple = true;
    for (const auto& part : u0.recipe->components) {
      ch.a += part.ch->a * Rational(part.multiplicity);
      ch.b += part.ch->b * Rational(part.multiplicity);
      parts.push_back({{"card", part.id}, {"count", part.multiplicity}});
      u0_simple = u0_simple && part.extra.value("simple", false);
    }
    rc.ch = ch;
    rc.average = ch.density();
    rc.extra["joined_from"] = parts;
    rc.extra["simple"] = u0_simple;
    rec.components.push_back(rc);
    rec.ordering += "; U_0 appended for odd parity";
  }
  rec.simple = std::all_of(rec.components.begin(), rec.components.end(),
                           [](const auto& c) { return c.extra.value("simple", false); });
  if (simple && !rec.simple) throw std::logic_error("simple plan uses a non-simple card");
  if (recompute_average(rec) != *r) throw std::logic_error("2cc degree-set recipe does not reproduce r");
  return PlanResult{std::move(rec), {}};
}

// ---------------------------------------------------------------------------
// Compensation and the general planner

std::pair<long long, long long> compensation_profile(long long m, long long q) {
  if (m < 12) throw InvalidInput("compensation gadget needs m >= 12, got " + std::to_string(m));
  if (q < 0) throw InvalidInput("compensation gadget needs q >= 0");
  return {6 * m + 6 + 2 * q, 28 * m + 18 + 6 * q};
}

Rational compensated_average(const std::vector<std::pair<Rational, Rational>>& components, long long m,
                             long long q, long long t) {
  if (t < 0) throw InvalidInput("number of zipped components must be >= 0");
  if (m < q + t) throw InvalidInput("compensation gadget needs m >= q + t");
  auto [n0, s0] = compensation_profile(m, q + t);
  Rational v(n0 - 2 * t);
  Rational s(s0 - 6 * t);
  for (const auto& [nv, sv] : components) {
    v += nv;
    s += sv;
  }
  return s / v;
}

namespace {

struct Family {
  RecipeComponent comp;
  Rational r;
  long long unit = 1;  // n0 must be a multiple of this
};

long long odd_at_least(long long x) {
  if (x < 3) x = 3;
  return x % 2 == 0 ? x + 1 : x;
}

Family staircase_family(int n) {
  Family f;
  auto& c = f.comp;
  c.kind = "staircase";
  c.id = "S(" + std::to_string(n) + ",m)";
  c.concrete = true;
  c.n = n;
  c.m = static_cast<int>(odd_at_least(4 * binomial2(n) - 5));
  c.k = staircase_claimed_k(n);
  c.degrees = {3, 4};
  DegreeHistogram h;
  h.counts[3] = static_cast<std::size_t>(c.m) * static_cast<std::size_t>(4 * n - 8);
  h.counts[4] = static_cast<std::size_t>(c.m);
  c.histogram = h;
  f.r = Rational(3) + Rational(1, 4 * n - 7);
  c.average = f.r;
  c.vertices = Rational(static_cast<long long>(h.vertex_count()));
  c.degree_sum = Rational(h.degree_sum());
  f.unit = static_cast<long long>(h.vertex_count());
  return f;
}

Family g_family(int l) {
  Family f;
  auto& c = f.comp;
  c.kind = "g";
  c.id = "G(" + std::to_string(l) + ",3,m)";
  c.concrete = true;
  c.l = l;
  c.n = 3;
  c.k = g_claimed_k(l, 3);
  c.m = static_cast<int>(odd_at_least(4 * c.k - 1));
  c.degrees = {3, 4, 2 * l + 3};
  DegreeHistogram h;
  const auto mm = static_cast<std::size_t>(3 * c.m);
  h.counts[3] += mm * 3;
  h.counts[4] += mm * static_cast<std::size_t>(2 * l);
  h.counts[2 * l + 3] += mm;
  c.histogram = h;
  f.r = Rational(5) - Rational(4, l + 2);
  c.average = f.r;
  c.vertices = Rational(static_cast<long long>(h.vertex_count()));
  c.degree_sum = Rational(h.degree_sum());
  f.unit = static_cast<long long>(h.vertex_count());
  return f;
}

RecipeComponent k33_component(long long copies) {
  RecipeComponent c;
  c.kind = "k33";
  c.id = "K33";
  c.multiplicity = copies;
  c.concrete = true;
  c.k = 1;
  c.degrees = {3};
  DegreeHistogram h;
  h.counts[3] = 6;
  c.histogram = h;
  c.average = Rational(3);
  c.vertices = Rational(6);
  c.degree_sum = Rational(18);
  return c;
}

// Abstract family of even degrees (4 and D_e) with average slightly above 4.
Family even_family(std::set<int> De, long long k, Rational r) {
  Family f;
  auto& c = f.comp;
  c.kind = "even_family";
  De.insert(4);
  if (*De.rbegin() < 6) De.insert(6);
  c.id = "F_e" + degrees_str(De);
  c.k = k;
  c.degrees = De;
  f.r = r;
  c.average = r;
  f.unit = r.den();
  c.extra["note"] = "crossed-belt family; realized only as a counting model";
  return f;
}

Family four_family(std::set<int> De, long long k, Rational r) {
  Family f;
  auto& c = f.comp;
  c.kind = "four_family";
  c.id = "F" + degrees_str(De);
  c.k = k;
  c.degrees = std::move(De);
  f.r = r;
  c.average = r;
  f.unit = r.den();
  c.extra["note"] = "crossed-belt family; realized only as a counting model";
  return f;
}

long long even_family_k(const std::set<int>& De) {
  int mx = De.empty() ? 4 : *De.rbegin();
  return std::max<long long>(5, mx / 2 + 1);
}

// Smallest k with k >= 10 or odd k >= 5, and r < 6 - 8/(k+1).
long long four_six_k(const Rational& r2) {
  for (long long k = 5;; ++k) {
    if (k < 10 && k % 2 == 0) continue;
    if (r2 < Rational(6) - Rational(8, k + 1)) return k;
    if (k > 100000) throw std::logic_error("no admissible k for the {4,6} family");
  }
}

void finish_concrete_claims(FamilyRecipe& rec) {
  if (!rec.concrete()) return;
  DegreeHistogram h;
  for (const auto& c : rec.components) {
    for (long long i = 0; i < c.multiplicity; ++i) h += *c.histogram;
  }
  auto& threes = h.counts[3];
  threes -= static_cast<std::size_t>(2 * rec.zips);
  if (threes == 0) h.counts.erase(3);
  rec.claimed_histogram = h;
  rec.claimed_r = h.average();
}

long long copies(const FamilyRecipe& rec) {
  long long n = 0;
  for (const auto& c : rec.components) n += c.multiplicity;
  return n;
}

PlanResult plan_general_no_r(const std::set<int>& D, long long k) {
  const bool has34 = D.contains(3) && D.contains(4);
  const bool all_even = std::all_of(D.begin(), D.end(), [](int d) { return d % 2 == 0; });
  FamilyRecipe rec;
  rec.planner = "general";
  rec.universality = "D-max-universal";
  rec.simple = true;

  if (has34) {
    std::set<int> De;
    for (int d : D) {
      if (d % 2 == 0) De.insert(d);
    }
    std::vector<RecipeComponent> comps{staircase_family(3).comp};
    long long K = 2;
    std::optional<std::size_t> even_at;
    if (*De.rbegin() >= 6) {
      long long ke = even_family_k(De);
      even_at = comps.size();
      comps.push_back(even_family(De, ke, Rational(41, 10)).comp);
      comps.back().average.reset();
      K += ke;
    }
    for (int a : D) {
      if (a % 2 == 1 && a > 3) {
        comps.push_back(g_family((a - 3) / 2).comp);
        K += comps.back().k;
      }
    }
    if (k == 0) k = K;
    if (k < K) return infeasible("k = " + std::to_string(k) + " is below K(D) = " + std::to_string(K));
    if (k > K) {
      if (even_at) {
        comps[*even_at].k += k - K;
      } else {
        comps.push_back(k33_component(k - K));
      }
    }
    rec.components = std::move(comps);
    rec.claimed_k = k;
    rec.claimed_D = D;
    rec.certificate["K"] = K;
    rec.certificate["K_formula"] = "k_e + 2 + sum k_a";
  } else if (D.contains(4) && all_even) {
    if (D == std::set<int>{4}) {
      long long kk = k == 0 ? 5 : k;
      if (kk < 5 || (kk < 10 && kk % 2 == 0)) {
        return infeasible("the {4} family needs k >= 10 or odd k >= 5");
      }
      rec.components.push_back(four_family({4}, kk, Rational(4)).comp);
      rec.claimed_k = kk;
      rec.certificate["K"] = 5;
    } else {
      long long K = even_family_k(D);
      if (k == 0) k = K;
      if (k < K) return infeasible("k = " + std::to_string(k) + " is below K(D) = " + std::to_string(K));
      rec.components.push_back(even_family(D, k, Rational(41, 10)).comp);
      rec.components.back().average.reset();
      rec.claimed_k = k;
      rec.certificate["K"] = K;
    }
    rec.claimed_D = D;
  } else {
    std::set<int> wider = D;
    wider.insert(3);
    wider.insert(4);
    PlanResult inner = plan_general_no_r(wider, k);
    if (!inner) return inner;
    inner.recipe->universality = "D-universal";
    inner.recipe->certificate["requested_D"] = degrees_str(D);
    return inner;
  }
  rec.zips = copies(rec) - 1;
  std::set<int> got;
  for (const auto& c : rec.components) got.insert(c.degrees.begin(), c.degrees.end());
  if (got != rec.claimed_D) {
    rec.universality = "D-universal";
    rec.certificate["frequent_degrees"] = degrees_str(got);
  }
  finish_concrete_claims(rec);
  return PlanResult{std::move(rec), {}};
}

PlanResult plan_general_r(const std::set<int>& D, const Rational& r, long long k) {
  const bool has34 = D.contains(3) && D.contains(4);
  const bool all_even = std::all_of(D.begin(), D.end(), [](int d) { return d % 2 == 0; });
  FamilyRecipe rec;
  rec.planner = "general";
  rec.claimed_r = r;
  rec.simple = true;

  if (!has34) {
    // Case d: crossed-belt families only.
    const bool big = D.contains(4) && D.contains(6) && all_even && r > Rational(4) && r < Rational(6);
    const bool four = D == std::set<int>{4} && r == Rational(4);
    if (!big && !four) return infeasible("no construction applies to D = " + degrees_str(D) + ", r = " + r.str());
    long long K = four ? 5 : std::max(four_six_k(r), even_family_k(D));
    if (k == 0) k = K;
    if (k < K || (k < 10 && k % 2 == 0) || r >= Rational(6) - Rational(8, k + 1)) {
      return infeasible("k = " + std::to_string(k) + " not admissible for the even family (K = " + std::to_string(K) + ")");
    }
    rec.components.push_back(four_family(D, k, r).comp);
    rec.claimed_k = k;
    rec.claimed_D = D;
    rec.universality = "D-max-universal";
    rec.certificate["case"] = "d";
    return PlanResult{std::move(rec), {}};
  }
  if (r <= Rational(3)) return infeasible("r must exceed 3");

  // F_1: staircase with 3 + 1/(4n-7) < r.
  int n = 3;
  while (Rational(3) + Rational(1, 4 * n - 7) >= r) ++n;
  std::vector<Family> fams{staircase_family(n)};

  int b = 0;
  for (int d : D) {
    if (d % 2 == 1 && d >= 5) b = std::max(b, d);
  }
  std::set<int> De;
  for (int d : D) {
    if (d % 2 == 0 && d >= 6) De.insert(d);
  }
  std::string cs;
  if (D == std::set<int>{3, 4}) {
    if (r >= Rational(4)) return infeasible("D = {3,4} needs r in (3,4)");
    fams.push_back(four_family({4}, 5, Rational(4)));
    cs = "b";
  } else if (b >= 5 && r < Rational(5) - Rational(8, b + 1)) {
    fams.push_back(g_family((b - 3) / 2));
    cs = b >= 9 ? "c" : "b";
  } else if (r <= Rational(4)) {
    fams.push_back(even_family(De, even_family_k(De), Rational(41, 10)));
    cs = "b";
  } else if (D.contains(6) && r < Rational(6)) {
    Rational r2 = (r + Rational(6)) / Rational(2);
    fams.push_back(four_family({4, 6}, four_six_k(r2), r2));
    cs = "a";
  } else {
    return infeasible("no construction applies to D = " + degrees_str(D) + ", r = " + r.str());
  }
  const Rational r1 = fams[0].r;
  const Rational r2 = fams[1].r;
  if (!(r1 < r && r < r2)) throw std::logic_error("building families do not bracket r");

  // Further families so that every degree of D occurs often.
  auto covered = [&]() {
    std::set<int> got;
    for (const auto& f : fams) got.insert(f.comp.degrees.begin(), f.comp.degrees.end());
    return got;
  };
  for (int d : D) {
    if (d % 2 == 1 && d > 3 && !covered().contains(d)) fams.push_back(g_family((d - 3) / 2));
  }
  bool need_even = false;
  for (int d : De) need_even = need_even || !covered().contains(d);
  if (need_even) fams.push_back(even_family(De, even_family_k(De), Rational(41, 10)));

  const auto t = static_cast<long long>(fams.size());
  long long ksum = 0;
  for (const auto& f : fams) ksum += f.comp.k;
  const long long K = ksum + 5;
  if (k == 0) k = K;
  if (k < K) return infeasible("k = " + std::to_string(k) + " is below K(D,r) = " + std::to_string(K));
  const long long ell = k - K;  // K33 copies

  // m with r1' = (m r1 + r3 + ... + rt)/(m + t - 2) < r.
  long long m = 1;
  Rational r1p;
  for (;; ++m) {
    Rational num = Rational(m) * r1;
    for (std::size_t i = 2; i < fams.size(); ++i) num += fams[i].r;
    r1p = num / Rational(m + t - 2);
    if (r1p < r) break;
    if (m > 1000000) throw std::logic_error("no m with r1' < r");
  }
  const long long s = m + t - 2;

  long long L = 6;
  for (const auto& f : fams) L = lcm_ll(L, f.unit);
  const long long need = std::max(6 * (4 * ell + t + 4), 6 * (ell + 13));
  const long long n0 = L * ((need + L - 1) / L);
  const Rational r0 = (Rational(14 * n0, 3) - Rational(10 * (ell + 1))) / Rational(n0);

  using i128 = __int128;
  const i128 p = r.num(), q = r.den();
  const i128 pa = r1p.num(), qa = r1p.den();
  const i128 pb = r2.num(), qb = r2.den();
  const i128 p0 = r0.num(), q0 = r0.den();
  const long long X = checked_narrow(i128(s) * qb * (p * qa - pa * q));
  const long long Y = checked_narrow(qa * (p * qb - pb * q));
  const long long c = checked_narrow(q0 * std::gcd(X, Y));
  const long long A = checked_narrow(i128(X) * q0);
  const long long B = checked_narrow(i128(Y) * q0);
  const long long C = checked_narrow(i128(c) * qa * qb * (p0 * q - p * q0));
  if (!(A > 0 && B < 0)) throw std::logic_error("Diophantine coefficients have the wrong signs");
  auto sol = diophantine_positive(A, B, C);
  if (!sol) return infeasible("Diophantine equation has no positive solution");

  std::vector<long long> mult(fams.size(), sol->a);
  mult[0] = m * sol->a;
  mult[1] = sol->b;
  // The weighted average of all parts must be r exactly.
  Rational num = Rational(c) * r0;
  Rational den(c);
  for (std::size_t i = 0; i < fams.size(); ++i) {
    num += Rational(mult[i]) * fams[i].r;
    den += Rational(mult[i]);
  }
  if (num / den != r) throw std::logic_error("weighted average does not reproduce r");

  std::vector<std::pair<Rational, Rational>> counted;
  for (std::size_t i = 0; i < fams.size(); ++i) {
    RecipeComponent comp = fams[i].comp;
    comp.multiplicity = 1;
    comp.concrete = false;  // scaled member, not the generator's base graph
    comp.vertices = Rational(mult[i]) * Rational(n0);
    comp.degree_sum = *comp.vertices * fams[i].r;
    comp.histogram.reset();
    comp.extra["scale_a"] = mult[i];
    comp.extra["base_m"] = comp.m;
    counted.emplace_back(*comp.vertices, *comp.degree_sum);
    rec.components.push_back(comp);
  }
  if (ell > 0) {
    rec.components.push_back(k33_component(ell));
    for (long long i = 0; i < ell; ++i) counted.emplace_back(Rational(6), Rational(18));
  }
  const long long gm = checked_narrow(i128(c) * n0 / 6 - i128(c) * (ell + 1));
  const long long gq = checked_narrow(3 * i128(c - 1) * (ell + 1));
  const long long zips = t + ell;
  auto [gn, gs] = compensation_profile(gm, gq + zips);
  RecipeComponent gadget;
  gadget.kind = "gadget";
  gadget.id = "M_" + std::to_string(gm) + "^" + std::to_string(gq + zips);
  gadget.k = 5;
  gadget.vertices = Rational(gn);
  gadget.degree_sum = Rational(gs);
  gadget.extra["m"] = gm;
  gadget.extra["c"] = gq + zips;
  gadget.extra["note"] = "compensation gadget; counting model only";
  rec.components.push_back(gadget);
  rec.zips = zips;

  const Rational comp_avg = compensated_average(counted, gm, gq, zips);
  if (comp_avg != r) throw std::logic_error("compensated average differs from r");
  if (recompute_average(rec) != r) throw std::logic_error("recipe counting model differs from r");

  rec.claimed_k = k;
  std::set<int> got;
  for (const auto& f : fams) got.insert(f.comp.degrees.begin(), f.comp.degrees.end());
  rec.claimed_D = D;
  rec.universality = got == D ? "D-max-universal" : "D-universal";
  rec.ordering = "zip product of all components with the compensation gadget";
  auto& cert = rec.certificate;
  cert["case"] = cs;
  cert["K"] = K;
  cert["K33_copies"] = ell;
  cert["n0"] = n0;
  cert["r0"] = r0.str();
  cert["r1_prime"] = r1p.str();
  cert["r2"] = r2.str();
  cert["m"] = m;
  cert["s"] = s;
  cert["A"] = A;
  cert["B"] = B;
  cert["C"] = C;
  cert["c"] = c;
  cert["a"] = sol->a;
  cert["b"] = sol->b;
  cert["step"] = {sol->step_a, sol->step_b};
  if (got != D) cert["frequent_degrees"] = degrees_str(got);
  return PlanResult{std::move(rec), {}};
}

}  // namespace

PlanResult plan_general(const std::set<int>& D, std::optional<Rational> r, long long k) {
  if (D.empty()) throw InvalidInput("empty degree set");
  if (*D.begin() < 3) throw InvalidInput("degrees must be >= 3");
  if (k < 0) throw InvalidInput("k must be >= 0");
  return r ? plan_general_r(D, *r, k) : plan_general_no_r(D, k);
}

namespace {

Multigraph prefixed(const Multigraph& g, const std::string& prefix) {
  Multigraph out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.add_vertex(prefix + g.label(v), g.role(v));
  for (const auto& e : g.bundles()) out.add_edge(e.u, e.v, e.multiplicity);
  return out;
}

VertexId zip_vertex(const Multigraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 3 && zippable(g, v)) return v;
  }
  throw InvalidInput("component has no zippable degree-3 vertex");
}

}  // namespace

Multigraph execute_recipe(const FamilyRecipe& recipe) {
  if (!recipe.concrete()) throw InvalidInput("recipe has abstract components and cannot be executed");
  Multigraph result;
  bool first = true;
  int index = 0;
  for (const auto& c : recipe.components) {
    for (long long i = 0; i < c.multiplicity; ++i, ++index) {
      Multigraph g;
      if (c.kind == "staircase") {
        g = staircase_strip(c.n, c.m);
      } else if (c.kind == "g") {
        g = g_graph(c.l, c.n, c.m);
      } else if (c.kind == "k33") {
        g = k33();
      } else {
        throw InvalidInput("cannot execute component kind '" + c.kind + "'");
      }
      const std::string prefix = "c" + std::to_string(index) + ".";
      if (first) {
        result = prefixed(g, prefix);
        first = false;
        continue;
      }
      result = zip(result, zip_vertex(result), g, zip_vertex(g), {0, 1, 2}, ZipLabels{"", prefix});
    }
  }
  return result;
}

nlohmann::json to_json(const DegreeHistogram& h) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [d, c] : h.counts) j[std::to_string(d)] = c;
  return j;
}

nlohmann::json to_json(const FamilyRecipe& r) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : r.components) {
    nlohmann::json j{{"kind", c.kind}, {"id", c.id}, {"multiplicity", c.multiplicity}, {"concrete", c.concrete}};
    if (c.kind == "staircase" || c.kind == "g") {
      j["params"] = {{"l", c.l}, {"n", c.n}, {"m", c.m}};
    }
    if (c.k) j["k"] = c.k;
    if (c.ch) j["characteristics"] = {{"a", c.ch->a.str()}, {"b", c.ch->b.str()}};
    if (c.average) j["average"] = c.average->str();
    if (c.vertices) j["vertices"] = c.vertices->str();
    if (c.degree_sum) j["degree_sum"] = c.degree_sum->str();
    if (!c.degrees.empty()) j["degrees"] = std::vector<int>(c.degrees.begin(), c.degrees.end());
    if (c.histogram) j["histogram"] = to_json(*c.histogram);
    if (!c.extra.empty()) j["extra"] = c.extra;
    comps.push_back(j);
  }
  nlohmann::json claimed{{"k", r.claimed_k},
                         {"D", std::vector<int>(r.claimed_D.begin(), r.claimed_D.end())},
                         {"universality", r.universality}};
  if (r.claimed_r) claimed["r"] = r.claimed_r->str();
  if (r.claimed_histogram) claimed["histogram"] = to_json(*r.claimed_histogram);
  return nlohmann::json{{"schema", "cckit.recipe/1"},
                        {"planner", r.planner},
                        {"components", comps},
                        {"ordering", r.ordering},
                        {"claimed", claimed},
                        {"simple", r.simple},
                        {"zips", r.zips},
                        {"certificate", r.certificate}};
}

std::string degrees_str(const std::set<int>& D) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int d : D) {
    if (!first) os << ',';
    first = false;
    os << d;
  }
  os << '}';
  return os.str();
}

std::set<int> parse_degrees(std::string_view text) {
  std::set<int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw InvalidInput("empty entry in degree list '" + std::string(text) + "'");
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("bad degree '" + cur + "'");
    }
    if (pos != cur.size() || v < 1) throw InvalidInput("bad degree '" + cur + "'");
    out.insert(v);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch != ' ' && ch != '{' && ch != '}') {
      cur += ch;
    }
  }
  flush();
  return out;
}

}  // namespace cckit
