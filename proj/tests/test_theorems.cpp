#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spectradom/graph6.hpp"
#include "spectradom/harness.hpp"
#include "spectradom/theorems.hpp"

using namespace spectradom;
using doctest::Approx;

TEST_CASE("theorem ids") {
  for (TheoremId id : kAllTheorems) CHECK(parse_theorem_id(to_string(id)) == id);
  CHECK(parse_theorem_id("l") == TheoremId::T31);
  CHECK(parse_theorem_id("Q") == TheoremId::T41);
  CHECK(parse_theorem_id("brand_seifter") == TheoremId::BRAND_SEIFTER);
  CHECK_FALSE(parse_theorem_id("T99"));
}

TEST_CASE("Laplacian bound") {
  const TheoremVerdict k22 = check_theorem_L(complete_bipartite(2, 2));
  CHECK(k22.theorem_id == TheoremId::T31);
  CHECK(k22.bound_value == 4);
  CHECK(k22.computed_value == Approx(4.0));
  CHECK(k22.bound_holds);
  CHECK(k22.equality);
  CHECK(k22.recognizer_accepts);
  CHECK(k22.characterization_consistent);

  const TheoremVerdict p4 = check_theorem_L(path(4));
  CHECK(p4.bound_value == 4);
  CHECK(p4.computed_value == Approx(2 + std::sqrt(2.0)));
  CHECK_FALSE(p4.equality);
  CHECK_FALSE(p4.recognizer_accepts);
  CHECK(p4.characterization_consistent);

  const TheoremVerdict k4 = check_theorem_L(complete(4));
  CHECK(k4.gamma == 1);
  CHECK(k4.computed_value == Approx(4.0));
  CHECK(k4.bound_holds);

  const TheoremVerdict e3 = check_theorem_L(empty_graph(3));
  CHECK(e3.gamma == 3);
  CHECK(e3.computed_value == 0.0);
  CHECK(e3.bound_holds);
}

TEST_CASE("gamma = 1 remark") {
  const TheoremVerdict star3 = check_remark_gamma1(star(3));
  CHECK(star3.computed_value == Approx(4.0));
  CHECK(star3.bound_holds);
  CHECK(check_remark_gamma1(complete(5)).computed_value == Approx(5.0));
  CHECK_THROWS_AS(check_remark_gamma1(cycle(4)), std::invalid_argument);
}

TEST_CASE("bipartite corollary") {
  const TheoremVerdict k23 = check_corollary_bipartite(add_isolated(complete_bipartite(2, 3), 1));
  CHECK(k23.n == 6);
  CHECK(k23.gamma == 3);
  CHECK(k23.bound_value == 5);
  CHECK(k23.computed_value == Approx(5.0));
  CHECK(k23.equality);
  CHECK(k23.recognizer_accepts);

  const TheoremVerdict c6 = check_corollary_bipartite(cycle(6));
  CHECK(c6.bound_value == 6);
  CHECK(c6.computed_value == Approx(4.0));
  CHECK_FALSE(c6.equality);

  const Graph three_k2 = from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
  const TheoremVerdict m = check_corollary_bipartite(three_k2);
  CHECK(m.gamma == 3);
  CHECK(m.bound_value == 5);
  CHECK(m.computed_value == Approx(2.0));

  CHECK_THROWS_AS(check_corollary_bipartite(complete(3)), std::invalid_argument);
  CHECK_THROWS_AS(check_corollary_bipartite(star(3)), std::invalid_argument);
}

TEST_CASE("signless Laplacian bound") {
  const TheoremVerdict k4k1 = check_theorem_Q(add_isolated(complete(4), 1));
  CHECK(k4k1.bound_value == 6);
  CHECK(k4k1.computed_value == Approx(6.0));
  CHECK(k4k1.equality);
  CHECK(k4k1.recognizer_accepts);
  CHECK(k4k1.detail.find("Q_clique") != std::string::npos);

  const TheoremVerdict cp3 = check_theorem_Q(cocktail_party(3));
  CHECK(cp3.bound_value == 8);
  CHECK(cp3.computed_value == Approx(8.0));
  CHECK(cp3.equality);
  CHECK(cp3.detail.find("Q_cocktail") != std::string::npos);

  // C_5 is 2-regular, so q = 4.
  const TheoremVerdict c5 = check_theorem_Q(cycle(5));
  CHECK(c5.bound_value == 6);
  CHECK(c5.computed_value == Approx(4.0));
  CHECK(c5.bound_holds);
  CHECK_FALSE(c5.equality);
  CHECK(c5.characterization_consistent);

  const TheoremVerdict e3 = check_theorem_Q(empty_graph(3));
  CHECK(e3.computed_value == 0.0);
  CHECK(e3.bound_holds);
  CHECK_FALSE(e3.equality);
}

TEST_CASE("bipartite signless bound") {
  const TheoremVerdict k22 = check_q_bipartite(complete_bipartite(2, 2));
  CHECK(k22.bound_value == 4);
  CHECK(k22.computed_value == Approx(4.0));
  CHECK(k22.equality);
  CHECK(k22.characterization_consistent);
  const TheoremVerdict p4 = check_q_bipartite(path(4));
  CHECK(p4.computed_value == Approx(2 + std::sqrt(2.0)));
  CHECK(p4.bound_holds);
  CHECK_THROWS_AS(check_q_bipartite(complete(3)), std::invalid_argument);
}

TEST_CASE("Brand-Seifter strict bound") {
  const TheoremVerdict p7 = check_brand_seifter(path(7));
  CHECK(p7.gamma == 3);
  CHECK(p7.bound_value == 6);
  CHECK(p7.computed_value == Approx(2 + 2 * std::cos(std::numbers::pi / 7)));
  CHECK(p7.bound_holds);
  const TheoremVerdict c9 = check_brand_seifter(cycle(9));
  CHECK(c9.bound_value == 8);
  CHECK(c9.bound_holds);
  CHECK_THROWS_AS(check_brand_seifter(complete(4)), std::invalid_argument);
  CHECK_THROWS_AS(check_brand_seifter(add_isolated(path(7), 1)), std::invalid_argument);
}

TEST_CASE("Ore, q <= 2(n-1) and the lemmas") {
  const TheoremVerdict c5 = check_ore(cycle(5));
  CHECK(c5.gamma == 2);
  CHECK(c5.bound_value == 2);
  CHECK(c5.bound_holds);
  CHECK_THROWS_AS(check_ore(add_isolated(cycle(5), 1)), std::invalid_argument);

  const TheoremVerdict k4 = check_q_2n2(complete(4));
  CHECK(k4.computed_value == Approx(6.0));
  CHECK(k4.equality);
  CHECK(k4.recognizer_accepts);
  CHECK_FALSE(check_q_2n2(cycle(4)).equality);

  const Graph k22 = complete_bipartite(2, 2);
  const GraphProfile p = profile(k22);
  const TheoremVerdict l31 = check_union_bound(k22, p);
  CHECK(l31.bound_value == 4);
  CHECK(l31.computed_value == Approx(4.0));
  CHECK(l31.equality);
  CHECK(l31.recognizer_accepts);
  const Graph split = add_isolated(path(2), 1);
  CHECK_THROWS_AS(check_union_bound(split, profile(split)), std::invalid_argument);

  const TheoremVerdict l22 = check_order_bound(k22, p);
  CHECK(l22.equality);
  CHECK(l22.recognizer_accepts);
  const TheoremVerdict l23 = check_degree_bounds(cycle(5), profile(cycle(5)));
  CHECK(l23.equality);
  CHECK(l23.recognizer_accepts);

  const Graph p3 = path(3);
  const TheoremVerdict l21 = check_edge_monotonicity(p3, profile(p3), Edge{0, 2});
  CHECK(l21.bound_holds);
  CHECK(l21.computed_value == Approx(3.0));
  CHECK_THROWS_AS(check_edge_monotonicity(p3, profile(p3), Edge{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(check_edge_monotonicity(complete(3), profile(complete(3))), std::invalid_argument);
}

TEST_CASE("applicable matches the checker preconditions") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      const GraphProfile p = profile(g);
      for (TheoremId id : kAllTheorems) {
        if (applicable(id, g, p)) {
          CHECK_NOTHROW(check(id, g, p));
        } else {
          CHECK_THROWS_AS(check(id, g, p), std::invalid_argument);
        }
      }
    }
  }
}

TEST_CASE("every checker holds and is consistent on all graphs with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      const GraphProfile p = profile(g);
      for (TheoremId id : kAllTheorems) {
        if (!applicable(id, g, p)) continue;
        const TheoremVerdict v = check(id, g, p);
        CHECK_MESSAGE(v.bound_holds, to_string(id), " ", emit_graph6(g));
        CHECK_MESSAGE(v.characterization_consistent, to_string(id), " ", emit_graph6(g));
      }
    }
  }
}
