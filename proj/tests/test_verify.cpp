#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypersimplex/errors.hpp"
#include "hypersimplex/verify.hpp"

using namespace hypersimplex;

TEST_CASE("verification passes on small dimensions") {
  const VerifyResult result = run_verification({5, false});
  CHECK(result.all_pass());
  CHECK(result.failed == 0);
  CHECK(result.passed == result.records.size());
  CHECK(result.records.size() > 50);
  CHECK(result.first_failure() == nullptr);
}

TEST_CASE("fault injection trips the degree check") {
  const VerifyResult result = run_verification({4, true});
  CHECK_FALSE(result.all_pass());
  REQUIRE(result.first_failure() != nullptr);
  CHECK(result.first_failure()->check == "degree_regularity");
}

TEST_CASE("d_max below 2 is rejected") {
  CHECK_THROWS_AS(run_verification({1, false}), ParamError);
}
