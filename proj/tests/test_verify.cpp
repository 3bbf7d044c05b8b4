#include <doctest.h>

#include <stdexcept>

#include "ncchain/verify.hpp"

using namespace ncchain;

TEST_CASE("all suites pass for n = 3..5") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& r : run_verification(n)) {
      INFO(r.name, " n=", n, " ", (r.failures.empty() ? "" : r.failures.front()));
      CHECK(r.passed());
    }
}

TEST_CASE("suite filter") {
  const auto r = run_verification(5, "hecke");
  REQUIRE(r.size() == 1);
  CHECK(r[0].name == "hecke");
  CHECK(r[0].checks > 0);
  CHECK_THROWS_AS(run_verification(4, "nope"), std::invalid_argument);
  CHECK_THROWS_AS(run_verification(1), std::invalid_argument);
  CHECK(suite_names().size() == 11);
}
