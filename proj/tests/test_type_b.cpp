#include <doctest.h>

#include "ncchain/catalan_enum.hpp"
#include "ncchain/type_b.hpp"
#include "oracles.hpp"

using namespace ncchain;

TEST_CASE("reflections normalize") {
  CHECK(BReflection(2, 1) == BReflection(1, 2));
  CHECK(BReflection(-2, -1) == BReflection(1, 2));
  CHECK(BReflection(2, -1) == BReflection(-1, 2));
  CHECK(BReflection(-3, 1) == BReflection(-1, 3));
  CHECK(BReflection(3, -3).is_sign_change());
  CHECK_THROWS_AS(BReflection(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(BReflection(2, 2), std::invalid_argument);
  CHECK(b_reflections(3).size() == 9);
}

TEST_CASE("conjugation matches permutation conjugation") {
  const int n = 3;
  for (auto g : b_reflections(n))
    for (auto h : b_reflections(n)) {
      const auto H = h.as_permutation(n);
      CHECK(conjugate(g, h).as_permutation(n) == H.inverse() * g.as_permutation(n) * H);
    }
}

TEST_CASE("Coxeter element") {
  CHECK(b_coxeter_element(1) == SignedPermutation::from_images({-1}));
  CHECK(b_coxeter_element(2) == BReflection(-1, 1).as_permutation(2) * BReflection(1, 2).as_permutation(2));
  for (int n = 1; n <= 5; ++n) CHECK(b_coxeter_element(n).order() == 2 * n);
  CHECK_THROWS_AS(SignedPermutation::from_images({1, -1}), std::invalid_argument);
}

TEST_CASE("enumeration equals brute-force counts") {
  CHECK(enumerate_HBn(1).size() == 1);
  for (int n = 2; n <= 3; ++n) CHECK(enumerate_HBn(n).size() == oracle::b_factorization_count(n));
  CHECK(oracle::b_factorization_count(2) == 4);
  CHECK(oracle::b_factorization_count(3) == 27);
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : enumerate_HBn(n)) {
      CHECK(w.length() == n);
      CHECK(b_product(w) == b_coxeter_element(n));
    }
  CHECK_THROWS_AS(enumerate_HBn(6), ResourceLimitExceeded);
}

TEST_CASE("Hurwitz moves on B_n words") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& w : enumerate_HBn(n))
      for (int i = 1; i < n; ++i) {
        CHECK(b_hurwitz_left(b_hurwitz_right(w, i), i) == w);
        CHECK(b_hurwitz_right(b_hurwitz_left(w, i), i) == w);
        if (i + 1 < n)
          CHECK(b_hurwitz_right(b_hurwitz_right(b_hurwitz_right(w, i), i + 1), i) ==
                b_hurwitz_right(b_hurwitz_right(b_hurwitz_right(w, i + 1), i), i + 1));
      }
  CHECK_THROWS_AS(b_hurwitz_right(b_base_word(3), 3), std::out_of_range);
}

TEST_CASE("type B metrics") {
  const std::vector<int> expected{0, 0, 2, 4, 7};
  for (int n = 2; n <= 4; ++n) {
    const auto g = build_b_graph(n);
    CHECK(g.adjacency.is_symmetric());
    const auto r = b_metrics(g, 2, 23);
    CHECK(r.radius == expected[n]);
    CHECK(r.conjecture_radius == static_cast<int>(binomial(n, 2)) + 1);
    CHECK(r.radius <= r.ecc_e);
    CHECK(r.diameter.has_value());
    CHECK(r.reference_antipodes == std::optional<std::size_t>(23));
    CHECK(r.antipodes_e == r.antipodes_max_rank);
    CHECK(r.count == r.expected_count);
  }
  CHECK_FALSE(b_metrics(build_b_graph(5), 1).diameter.has_value());
}
