#include <doctest.h>

#include "support/property_suites.hpp"

TEST_CASE("randomized word-order property suites") {
  for (const auto& suite : testsupport::run_property_suites()) {
    CAPTURE(suite.name);
    CAPTURE(suite.note);
    CHECK(suite.cases >= 10000);
    CHECK(suite.failures == 0);
  }
}
