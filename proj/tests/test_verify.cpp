#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "unfold/verify.hpp"

using namespace unfold;

// Scaled-down runs of every self-check suite. The full scopes run in the
// acceptance gate; here the point is that each suite exercises its laws and
// reports honestly.

TEST_CASE("route agreement suite") {
  const SuiteResult r = verify_routes(5);
  CHECK(r.passed);
  CHECK(r.cases == 33);  // cyclic permutations of period 2..5
  CHECK(r.failures == 0);
  const std::string s = suite_summary(r);
  CHECK(s.find("routes: PASS") == 0);
}

TEST_CASE("comparison suite on convergent patterns") {
  const SuiteResult r = verify_comparison(5);
  CHECK(r.passed);
  CHECK(r.failures == 0);
  CHECK(r.cases > 33);  // several checks per convergent pattern
}

TEST_CASE("pouring laws on seeded lifts") {
  const SuiteResult r = verify_pouring(20);
  CHECK(r.passed);
  CHECK(r.failures == 0);
  CHECK(r.cases >= 8 * 20);
}

TEST_CASE("rotation laws at a small denominator budget") {
  const SuiteResult r = verify_rotation(12, 10);
  CHECK(r.passed);
  CHECK(r.failures == 0);
  CHECK(r.cases >= 47 + 2 * 10);  // translations plus per-pair checks
}

TEST_CASE("divergent realizations inside the 4-pattern") {
  const SuiteResult r = verify_divergent(9);
  CHECK(r.passed);
  CHECK(r.cases == 5);  // (1,6) (1,7) (1,8) (1,9) (2,9)
  CHECK(r.failures == 0);
}

TEST_CASE("interval suite separates the reversed pattern") {
  const IntervalVerdict v = verify_interval_detailed(4, 6);
  CHECK_FALSE(v.suite.passed);   // the reversed 4-pattern breaks the blanket 1/2 claim
  CHECK(v.suite.failures == 1);  // and nothing else fails
  CHECK_FALSE(v.upper_all);
  CHECK(v.upper_standard);
  CHECK(v.membership);
  CHECK(v.fixture);
  const std::string s = suite_summary(v.suite);
  CHECK(s.find("interval: FAIL") == 0);
  CHECK(s.find("(1,3,4,2)") != std::string::npos);
}

TEST_CASE("sharkovsky order and spectra closure") {
  const SuiteResult r = verify_sharkovsky(4, 6, 16);
  CHECK(r.passed);
  CHECK(r.failures == 0);
  CHECK(r.cases > 17 * 17 * 17 / 2);  // transitivity dominates
}

TEST_CASE("realization suite on the small cohort") {
  const SuiteResult r = verify_realization(4, 6, 18);
  CHECK(r.passed);
  CHECK(r.failures == 0);
  CHECK(r.cases == 9);  // every pattern of period <= 4 has a small exact u_f
}
