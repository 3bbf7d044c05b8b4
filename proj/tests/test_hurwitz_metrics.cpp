#include <doctest.h>

#include <random>
#include <set>

#include "figures.hpp"
#include "ncchain/chain_map.hpp"
#include "ncchain/hurwitz_metrics.hpp"
#include "ncchain/weak_order.hpp"
#include "support.hpp"

using namespace ncchain;
using support::W;

TEST_CASE("G_T(4) matches the drawing") {
  const auto g = build_graph(4);
  CHECK(g.size() == 16);
  std::set<std::pair<FactorWord, FactorWord>> got, want;
  for (std::size_t v = 0; v < g.size(); ++v)
    for (VertexId u : g.adjacency().neighbors(v))
      if (u > v) got.emplace(g.word(v), g.word(u));
  for (auto [a, b] : figures::kHurwitzGraph4) want.emplace(std::min(W(a), W(b)), std::max(W(a), W(b)));
  CHECK(got == want);
  CHECK(g.adjacency().is_symmetric());
}

TEST_CASE("graph adjacency matches oracle moves, n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    const auto g = build_graph(n);
    for (std::size_t v = 0; v < g.size(); ++v) {
      std::set<oracle::Word> want;
      const auto ow = support::to_oracle(g.word(v));
      for (int i = 1; i <= n - 2; ++i) {
        want.insert(oracle::move_right(n, ow, i));
        want.insert(oracle::move_left(n, ow, i));
      }
      want.erase(ow);
      std::set<oracle::Word> got;
      for (VertexId u : g.adjacency().neighbors(v)) got.insert(support::to_oracle(g.word(u)));
      CHECK(got == want);
    }
  }
}

TEST_CASE("radius and diameter for small n") {
  const auto r3 = radius_and_diameter(build_graph(3));
  CHECK(r3.radius == 1);
  CHECK(r3.diameter == 1);
  const auto r4 = radius_and_diameter(build_graph(4), 2);
  CHECK(r4.radius == 3);
  CHECK(r4.diameter == 3);
  CHECK(r4.ecc_e == 3);
  CHECK(r4.antipodes_e == 5);
  CHECK(r4.diameter_matches_conjecture);
  const auto r5 = radius_and_diameter(build_graph(5));
  CHECK(r5.radius == 6);
  CHECK(r5.diameter_within_bounds);
}

TEST_CASE("eccentricities equal oracle BFS, n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    const auto g = build_graph(n);
    for (std::size_t v = 0; v < g.size(); ++v) {
      const auto dist = oracle::distances_from(n, support::to_oracle(g.word(v)));
      const auto e = eccentricity(g, v);
      int ecc = 0;
      for (std::size_t u = 0; u < g.size(); ++u) {
        CHECK(e.distances[u] == dist.at(support::to_oracle(g.word(u))));
        ecc = std::max(ecc, e.distances[u]);
      }
      CHECK(e.ecc == ecc);
      CHECK(e.ecc >= radius_formula(n));
    }
  }
}

TEST_CASE("parallel sweep gives the same eccentricities") {
  const auto g = build_graph(6);
  CHECK(eccentricities(g.adjacency(), 1) == eccentricities(g.adjacency(), 3));
}

TEST_CASE("graph cap") { CHECK_THROWS_AS(build_graph(9), ResourceLimitExceeded); }

TEST_CASE("antipodes of e are the maximal words") {
  for (int n = 3; n <= 6; ++n) {
    const auto g = build_graph(n);
    std::vector<FactorWord> anti;
    for (auto v : antipodes(g, g.base_vertex())) anti.push_back(g.word(v));
    CHECK(anti == maximal_elements(n));
    CHECK(eccentricity(g, g.base_vertex()).ecc == radius_formula(n));
  }
}

TEST_CASE("phi is a contraction") {
  for (int n = 3; n <= 6; ++n) {
    const auto rep = contraction_report(build_graph(n), 16);
    CHECK(rep.ok());
    CHECK(rep.edges_checked > 0);
  }
  const auto e = FactorWord::base(5);
  for (const auto& w0 : maximal_elements(5)) CHECK(cayley_distance(phi(e), phi(w0)) == radius_formula(5));
  CHECK(cayley_distance(phi(W("12,24,23")), phi(W("12,34,24"))) <= 1);
}

TEST_CASE("bubble-sort meet, all pairs n <= 5") {
  // Equal inputs are still pushed in lockstep, so each move on v has a twin on w.
  const auto same = bubble_sort_meet(W("13,12,34"), W("13,12,34"));
  CHECK(same.moves_v == same.moves_w);
  CHECK(same.length() <= static_cast<std::size_t>(diameter_upper_bound(4)));
  const auto p = bubble_sort_meet(FactorWord::base(4), W("14,13,12"));
  CHECK(p.length() <= 4);
  for (int n = 3; n <= 5; ++n) {
    const auto g = build_graph(n);
    const int bound = diameter_upper_bound(n);
    for (std::size_t v = 0; v < g.size(); ++v) {
      const auto dist = eccentricity(g, v).distances;
      for (std::size_t w = 0; w < g.size(); ++w) {
        const auto path = bubble_sort_meet(g.word(v), g.word(w));
        FactorWord x = g.word(v), y = g.word(w);
        for (auto m : path.moves_v) {
          x = apply_move(x, m);
          REQUIRE(is_valid_chain(x));
        }
        for (auto m : path.moves_w) {
          y = apply_move(y, m);
          REQUIRE(is_valid_chain(y));
        }
        CHECK(x == y);
        CHECK(static_cast<int>(path.length()) <= bound);
        CHECK(static_cast<int>(path.length()) >= dist[w]);
      }
    }
  }
  CHECK_THROWS_AS(bubble_sort_meet(FactorWord::base(4), FactorWord::base(5)), std::invalid_argument);
}

TEST_CASE("bubble-sort meet, sampled pairs n = 6, 7") {
  for (int n : {6, 7}) {
    const auto words = enumerate_Fn(n);
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int k = 0; k < 2000; ++k) {
      const auto& v = words[pick(rng)];
      const auto& w = words[pick(rng)];
      const auto path = bubble_sort_meet(v, w);
      FactorWord x = v, y = w;
      for (auto m : path.moves_v) x = apply_move(x, m);
      for (auto m : path.moves_w) y = apply_move(y, m);
      CHECK(x == y);
      CHECK(static_cast<int>(path.length()) <= diameter_upper_bound(n));
    }
  }
}

TEST_CASE("bound formulas") {
  CHECK(radius_formula(6) == 10);
  CHECK(diameter_upper_bound(6) == 14);
  CHECK(conjecture_diameter(6) == 11);
  for (int n = 3; n <= 12; ++n) CHECK(2 * diameter_upper_bound(n) <= 3 * radius_formula(n));
}
