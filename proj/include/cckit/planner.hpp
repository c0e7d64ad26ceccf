#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cckit/multigraph.hpp"
#include "cckit/rational.hpp"

namespace cckit {

/// (a, b): half-weighted vertex count and degree sum of a tile.
struct DensityCharacteristics {
  Rational a;
  Rational b;
  Rational density() const { return b / a; }
  DensityCharacteristics& operator+=(const DensityCharacteristics& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
};

struct TileCard {
  std::string id;
  DensityCharacteristics ch;
  bool simple = true;
  /// False when only the density is known and (a, b) is a representative.
  bool verified = true;
  std::string note;
};

/// T_a..T_g, T_n, T_p and the composite cards used by the 2-crossing-critical planner.
const std::vector<TileCard>& card_catalog();
const TileCard& card(std::string_view id);

using CardCount = std::pair<TileCard, long long>;
Rational seq_average_degree(const std::vector<CardCount>& cards);

struct IntervalMix {
  bool feasible = false;
  bool single_card = false;  // r is an end point; only the matching card is used
  long long k1 = 0;
  long long k2 = 0;
  std::string reason;
};

/// k1 = q*b2 - p*a2, k2 = p*a1 - q*b1, reduced. Requires density(c1) <= density(c2).
IntervalMix solve_interval_mix(const TileCard& c1, const TileCard& c2, Rational r);

/// One building block of a recipe.
struct RecipeComponent {
  std::string kind;  // card | staircase | g | k33 | four_family | even_family | gadget
  std::string id;
  long long multiplicity = 1;  // tile count (cards) or number of graph copies
  bool concrete = false;       // realizable by the generators
  int l = 0;
  int n = 0;
  int m = 0;
  long long k = 0;  // crossing number contributed
  std::optional<DensityCharacteristics> ch;  // cards
  std::optional<Rational> average;
  std::optional<Rational> vertices;     // per copy
  std::optional<Rational> degree_sum;   // per copy
  std::set<int> degrees;                // degrees occurring frequently
  std::optional<DegreeHistogram> histogram;  // closed form, concrete components only
  nlohmann::json extra = nlohmann::json::object();
};

struct FamilyRecipe {
  std::string planner;  // 2cc_average | 2cc_degrees | general
  std::vector<RecipeComponent> components;
  std::string ordering;
  long long claimed_k = 0;
  std::set<int> claimed_D;
  std::string universality;  // D-universal | D-max-universal
  std::optional<Rational> claimed_r;
  bool simple = false;
  long long zips = 0;
  std::optional<DegreeHistogram> claimed_histogram;
  nlohmann::json certificate = nlohmann::json::object();

  bool concrete() const;
};

/// Either a recipe or the reason there is none.
struct PlanResult {
  std::optional<FamilyRecipe> recipe;
  std::string reason;
  explicit operator bool() const { return recipe.has_value(); }
};

/// Average degree recomputed from the recipe's own numbers (cards or counting model).
Rational recompute_average(const FamilyRecipe& r);

/// `member` is the family index (>= 1) scaling all multiplicities by 2*member - 1.
PlanResult plan_2cc_average(Rational r, bool simple, long long member = 1);

/// Feasibility of a degree set for 2-crossing-critical max-universal families.
bool degree_set_feasible_2cc(const std::set<int>& D, bool simple);

struct Interval {
  bool empty = true;
  Rational lo;
  Rational hi;
  bool lo_closed = false;
  bool hi_closed = false;
  bool contains(const Rational& r) const;
  std::string str() const;
};
/// The I_D (general) or I_D^s (simple) interval; nullopt for sets outside the table.
std::optional<Interval> average_interval_2cc(const std::set<int>& D, bool simple);

PlanResult plan_2cc_D(const std::set<int>& D, std::optional<Rational> r, bool simple,
                      long long member = 1);

/// n0 = 6m + 6 + 2q and s0 = 28m + 18 + 6q of M_m^q.
std::pair<long long, long long> compensation_profile(long long m, long long q);

/// Average degree of the zip of components (vertices, degree sum) with M_m^{q+t}.
Rational compensated_average(const std::vector<std::pair<Rational, Rational>>& components,
                             long long m, long long q, long long t);

/// k = 0 selects the smallest admissible k.
PlanResult plan_general(const std::set<int>& D, std::optional<Rational> r, long long k = 0);

/// Builds the graph of a concrete recipe by chained zips (labels prefixed c<i>.).
Multigraph execute_recipe(const FamilyRecipe& recipe);

nlohmann::json to_json(const FamilyRecipe& r);
nlohmann::json to_json(const DegreeHistogram& h);
std::string degrees_str(const std::set<int>& D);
std::set<int> parse_degrees(std::string_view text);

}  // namespace cckit
