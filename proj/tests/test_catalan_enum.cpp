#include <doctest.h>

#include <map>
#include <numeric>

#include "ncchain/catalan_enum.hpp"
#include "ncchain/chain_map.hpp"
#include "ncchain/weak_order.hpp"
#include "support.hpp"

using namespace ncchain;
using support::W;

namespace {

std::uint64_t power(int b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= std::uint64_t(b);
  return r;
}

QTPolynomial q(int a, int b) { return QTPolynomial::monomial(a, b); }

}  // namespace

TEST_CASE("|F_n| = n^(n-2)") {
  for (int n = 2; n <= 7; ++n) CHECK(enumerate_Fn(n).size() == power(n, n - 2));
  CHECK_THROWS_AS(enumerate_Fn(10), ResourceLimitExceeded);
  CHECK_THROWS_AS(enumerate_Fn(6, 5), ResourceLimitExceeded);
}

TEST_CASE("enumeration equals brute-force filtering, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<FactorWord> brute;
    for (const auto& w : oracle::factorizations(n)) brute.push_back(support::from_oracle(n, w));
    std::sort(brute.begin(), brute.end());
    CHECK(enumerate_Fn(n) == brute);
  }
}

TEST_CASE("word index lookups") {
  const WordIndex idx(enumerate_Fn(4));
  CHECK(idx.size() == 16);
  CHECK(idx.index_of(FactorWord::base(4)) == 0);
  CHECK_FALSE(idx.find(FactorWord(4, {{1, 2}, {1, 2}, {3, 4}})).has_value());
  CHECK_THROWS_AS(idx.index_of(FactorWord(4, {{1, 2}, {1, 2}, {3, 4}})), std::out_of_range);
}

TEST_CASE("Catalan and binomial numbers") {
  const std::vector<std::uint64_t> c{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n < int(c.size()); ++n) CHECK(catalan_number(n) == c[n]);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("maximal words are counted by Catalan numbers and contain (1,n)") {
  for (int n = 3; n <= 7; ++n) {
    const auto maxima = maximal_elements(n);
    CHECK(maxima.size() == catalan_number(n - 1));
    for (const auto& w : maxima) {
      const auto f = w.factors();
      CHECK(std::find(f.begin(), f.end(), Transposition(1, n)) != f.end());
    }
  }
}

TEST_CASE("patterns") {
  const auto pi = Permutation::from_images({3, 5, 7, 2, 1, 4, 6});
  CHECK(pattern(pi, {1, 2, 6, 7}) == Permutation::from_images({4, 2, 1, 3}));
  CHECK(pattern(pi, {}).size() == 0);
}

TEST_CASE("fiber recursion on the worked S_5 example") {
  auto N = [](std::initializer_list<int> l) { return fiber_count(Permutation::from_images(l)).count; };
  const auto lhs = N({4, 1, 3, 5, 2});
  const auto rhs = N({1, 3, 2}) * N({1}) + N({2, 1}) * N({1, 2}) + N({1}) * N({1, 3, 2}) +
                   fiber_count(Permutation::identity(0)).count * N({1, 3, 4, 2});
  CHECK(lhs == rhs);
}

TEST_CASE("fiber recursion equals direct fiber counts, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    std::map<std::vector<int>, std::uint64_t> direct;
    for (const auto& w : enumerate_Fn(n)) ++direct[oracle::phi_by_sets(n, support::to_oracle(w))];
    std::vector<int> images(static_cast<std::size_t>(n - 1));
    std::iota(images.begin(), images.end(), 1);
    std::uint64_t total = 0;
    do {
      const auto got = fiber_count(Permutation::from_images(images)).count;
      CHECK(got == direct[images]);
      total += got;
    } while (std::next_permutation(images.begin(), images.end()));
    CHECK(total == power(n, n - 2));
  }
}

TEST_CASE("(q,t)-Catalan values and symmetries") {
  CHECK(qt_catalan(0) == QTPolynomial::one());
  CHECK(qt_catalan(1) == QTPolynomial::one());
  CHECK(qt_catalan(3) == q(3, 0) + q(2, 1) + q(1, 2) + q(0, 3) + q(1, 1));
  for (int n = 0; n <= 9; ++n) {
    const auto tc = qt_catalan(n);
    CHECK(tc == tc.swapped());
    CHECK(static_cast<std::uint64_t>(tc.coefficient_sum()) == catalan_number(n));
    CHECK(carlitz_riordan(n) == tc.reflected_q(static_cast<int>(binomial(n, 2))));
  }
}

TEST_CASE("Carlitz-Riordan polynomial counts Dyck paths by area above") {
  for (int n = 0; n <= 10; ++n) {
    QTPolynomial by_area;
    for (const auto& p : dyck_paths(n)) by_area += q(oracle::dyck_area_above(p.steps()), 0);
    CHECK(carlitz_riordan(n) == by_area);
  }
}

TEST_CASE("Dyck paths") {
  CHECK(dyck_paths(4).size() == 14);
  CHECK(DyckPath::parse("UUDD").str() == "UUDD");
  CHECK_THROWS_AS(DyckPath::parse("UDDU"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::parse("UUD"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::parse("UXD"), std::invalid_argument);
  for (const auto& p : dyck_paths(8)) CHECK(dyck_statistics(p).area == oracle::dyck_area(p.steps()));
  CHECK(dyck_statistics(DyckPath::parse("UDUDUD")).bmaj == 3);
  CHECK(dyck_statistics(DyckPath::parse("UUUDDD")).bmaj == 0);
}

TEST_CASE("Dyck area/bmaj polynomial is tC_n, n <= 12") {
  for (int n = 0; n <= 12; ++n) CHECK(dyck_generating_function(n) == qt_catalan(n));
}

TEST_CASE("maximal-word statistics give tC_n and C_n(q), n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(max_statistics(n) == qt_catalan(n));
    CHECK(max_statistics_ln(n) == carlitz_riordan(n));
  }
  CHECK(max_statistics(3) == q(3, 0) + q(2, 1) + q(1, 2) + q(0, 3) + q(1, 1));
}

TEST_CASE("alternating non-crossing trees agree with brute force, n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    std::vector<std::vector<oracle::Pair>> got;
    for (const auto& t : alternating_noncrossing_trees(n)) {
      std::vector<oracle::Pair> edges;
      for (auto e : t.edges()) edges.emplace_back(e.a, e.b);
      got.push_back(edges);
    }
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::alternating_trees(n));
    CHECK(got.size() == catalan_number(n - 1));
  }
}

TEST_CASE("word of a tree") {
  const GeometricTree star(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(word_of_tree(star) == W("14,13,12"));
  CHECK_THROWS_AS(word_of_tree(GeometricTree(4, {{1, 3}, {2, 4}, {1, 4}})), std::invalid_argument);
  CHECK_THROWS_AS(word_of_tree(GeometricTree(4, {{1, 2}, {2, 3}, {3, 4}})), std::invalid_argument);
  CHECK_THROWS_AS(word_of_tree(GeometricTree(4, {{1, 2}, {1, 2}, {3, 4}})), std::invalid_argument);
}

TEST_CASE("trees and maximal words are in bijection, n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    std::vector<FactorWord> images;
    for (const auto& t : alternating_noncrossing_trees(n)) {
      const auto w = word_of_tree(t);
      CHECK(is_maximal(w));
      CHECK(tree_of_word(w).edges() == t.edges());
      images.push_back(w);
    }
    std::sort(images.begin(), images.end());
    CHECK(images == maximal_elements(n));
    for (const auto& w : maximal_elements(n)) CHECK(word_of_tree(tree_of_word(w)) == w);
  }
}

TEST_CASE("tree edge-pair statistics") {
  const auto s = edge_pair_statistics(GeometricTree(4, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(s.right == 3);
  CHECK(s.left == 0);
  CHECK(s.neutral == 0);
  for (int n = 2; n <= 7; ++n) CHECK(tree_statistics(n) == qt_catalan(n - 1));
  // Edge pairs follow the inversion kinds of the corresponding word.
  for (const auto& w : maximal_elements(6)) {
    const auto t = inversion_table(w);
    const auto e = edge_pair_statistics(tree_of_word(w));
    CHECK(e.right == t.count(InversionKind::Right));
    CHECK(e.left == t.count(InversionKind::Left));
    CHECK(e.neutral == t.count(InversionKind::Neutral));
  }
}

TEST_CASE("polynomial arithmetic") {
  const auto p = q(1, 0) + q(0, 1);
  CHECK((p * p) == q(2, 0) + q(1, 1) + q(1, 1) + q(0, 2));
  CHECK((p * p).coefficient(1, 1) == 2);
  CHECK(p.at_t_one() == q(1, 0) + q(0, 0));
  CHECK_THROWS_AS(QTPolynomial::monomial(-1, 0), std::domain_error);
  CHECK_THROWS_AS(q(3, 0).reflected_q(2), std::domain_error);
  QTPolynomial z = q(1, 1);
  z.add_term(1, 1, -1);
  CHECK(z.is_zero());
  CHECK(q(3, 0).str() == "q^3");
}
