// Runs the full verification corpus and prints one line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "burch/verify.hpp"

using namespace burch;

TEST_CASE("verification corpus, full level") {
  auto results = run_verification(VerifyLevel::full);
  REQUIRE(results.size() == 12);
  for (const auto& r : results) {
    std::printf("%s  %2d. %s (%s)\n", r.passed ? "pass" : "FAIL", r.number,
                r.name.c_str(), r.detail.c_str());
    std::fflush(stdout);
    CHECK_MESSAGE(r.passed, r.name, ": ", r.detail);
    CHECK_FALSE(r.skipped);
  }
}
