#include <doctest.h>

#include "cckit/diophantine.hpp"
#include "cckit/planner.hpp"

using namespace cckit;

TEST_CASE("card catalog densities") {
  CHECK(card("T_a").ch.density() == Rational(16, 5));
  CHECK(card("T_c").ch.density() == Rational(4));
  CHECK(card("T_e").ch.density() == Rational(14, 3));
  CHECK(card("T_ba").ch.density() == Rational(17, 5));
  CHECK_FALSE(card("T_g").verified);
  CHECK_THROWS_AS(card("T_zz"), InvalidInput);
}

TEST_CASE("interval mix") {
  auto m = solve_interval_mix(card("T_a"), card("T_c"), Rational(18, 5));
  REQUIRE(m.feasible);
  CHECK(seq_average_degree({{card("T_a"), m.k1}, {card("T_c"), m.k2}}) == Rational(18, 5));
  auto end = solve_interval_mix(card("T_a"), card("T_c"), Rational(4));
  CHECK(end.single_card);
  CHECK(end.k2 == 1);
  CHECK_FALSE(solve_interval_mix(card("T_a"), card("T_c"), Rational(5)).feasible);
  CHECK_THROWS_AS(solve_interval_mix(card("T_c"), card("T_a"), Rational(7, 2)), InvalidInput);
}

TEST_CASE("2cc average plan at 7/2") {
  auto p = plan_2cc_average(Rational(7, 2), true);
  REQUIRE(p);
  const auto& c = p.recipe->components;
  REQUIRE(c.size() == 3);
  CHECK(c[0].multiplicity == 20);
  CHECK(c[1].multiplicity == 8);
  CHECK(c[2].multiplicity == 13);
  CHECK(recompute_average(*p.recipe) == Rational(7, 2));
  // Member 2 triples every count.
  auto p2 = plan_2cc_average(Rational(7, 2), true, 2);
  CHECK(p2.recipe->components[0].multiplicity == 60);
  CHECK_FALSE(plan_2cc_average(Rational(5), true));
  CHECK_FALSE(plan_2cc_average(Rational(3), false));
  CHECK(plan_2cc_average(Rational(9, 2), false));
}

TEST_CASE("2cc degree-set feasibility") {
  CHECK(degree_set_feasible_2cc({3, 4}, true));
  CHECK_FALSE(degree_set_feasible_2cc({4, 5}, true));
  CHECK(degree_set_feasible_2cc({4, 5}, false));
  CHECK_FALSE(degree_set_feasible_2cc({5, 6}, false));
  CHECK_FALSE(degree_set_feasible_2cc({3}, false));
  CHECK_FALSE(degree_set_feasible_2cc({3, 7}, false));
  auto p = plan_2cc_D({3, 4, 5}, std::nullopt, true);
  REQUIRE(p);
  CHECK(p.recipe->universality == "D-max-universal");
}

TEST_CASE("2cc degree-set plan at 7/2 uses T_a, T_g and a U_0 parity fix") {
  auto p = plan_2cc_D({3, 4}, Rational(7, 2), true);
  REQUIRE(p);
  const auto& c = p.recipe->components;
  REQUIRE(c.size() == 3);
  CHECK(c[0].id == "T_a");
  CHECK(c[1].id == "T_g");
  CHECK(c[2].id == "U_0");
  CHECK((c[0].multiplicity + c[1].multiplicity + c[2].multiplicity) % 2 == 1);
  CHECK(recompute_average(*p.recipe) == Rational(7, 2));
}

TEST_CASE("diophantine solver") {
  auto s = diophantine_positive(3, -5, 235);
  REQUIRE(s);
  CHECK(s->a > 0);
  CHECK(s->b > 0);
  CHECK(3 * s->a - 5 * s->b == 235);
  CHECK_FALSE(diophantine_positive(4, -6, 7));
  CHECK_THROWS_AS(diophantine_positive(0, 0, 1), InvalidInput);
  auto bounded = diophantine_positive(2, 3, 12);
  REQUIRE(bounded);
  CHECK(bounded->bounded);
  CHECK(2 * bounded->a + 3 * bounded->b == 12);
  CHECK_FALSE(diophantine_positive(2, 3, 4));  // only (2,0), not positive
}

TEST_CASE("compensation profile") {
  auto [n0, s0] = compensation_profile(12, 0);
  CHECK(n0 == 78);
  CHECK(s0 == 354);
  CHECK_THROWS_AS(compensation_profile(11, 0), InvalidInput);
  // No components, no zips: just the gadget.
  CHECK(compensated_average({}, 12, 0, 0) == Rational(354, 78));
}

TEST_CASE("general planner with average degree") {
  auto p = plan_general({3, 4}, Rational(7, 2));
  REQUIRE(p);
  CHECK(recompute_average(*p.recipe) == Rational(7, 2));
  CHECK(p.recipe->claimed_k == p.recipe->certificate["K"].get<long long>());
  auto q = plan_general({3, 4, 5}, Rational(37, 10));
  REQUIRE(q);
  CHECK(recompute_average(*q.recipe) == Rational(37, 10));
  CHECK_FALSE(plan_general({3, 4}, Rational(5)));
  CHECK_FALSE(plan_general({3, 4}, Rational(7, 2), 3));  // below K
}

TEST_CASE("general planner without average degree") {
  auto p = plan_general({3, 4, 9}, std::nullopt);
  REQUIRE(p);
  bool has_g = false;
  for (const auto& c : p.recipe->components) {
    if (c.kind == "g") {
      has_g = true;
      CHECK(c.l == 3);
      CHECK(c.k == 23);
    }
  }
  CHECK(has_g);
  CHECK(p.recipe->claimed_k == 25);
  auto wider = plan_general({5}, std::nullopt);
  REQUIRE(wider);
  CHECK(wider.recipe->universality == "D-universal");
  CHECK_THROWS_AS(plan_general({2, 3}, std::nullopt), InvalidInput);
}

TEST_CASE("degree lists") {
  CHECK(parse_degrees("3,4,9") == std::set<int>{3, 4, 9});
  CHECK(parse_degrees("{3, 4}") == std::set<int>{3, 4});
  CHECK_THROWS_AS(parse_degrees("3,,4"), InvalidInput);
  CHECK_THROWS_AS(parse_degrees("3,x"), InvalidInput);
  CHECK(degrees_str({3, 4}) == "{3,4}");
}
