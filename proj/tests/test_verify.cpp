#include <doctest.h>

#include "eh/error.hpp"
#include "eh/verify.hpp"

using namespace eh;

TEST_CASE("every suite passes at the default bound") {
  auto reports = verify_tables({}, 4);
  REQUIRE(reports.size() == 7);
  for (const auto& r : reports) {
    CAPTURE(r.table);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.expected);
      CAPTURE(c.computed);
      CHECK(c.pass);
    }
    CHECK(r.failed() == 0);
  }
  CHECK(all_passed(reports));
}

TEST_CASE("suite sizes are stable") {
  CHECK(verify_table(2).checks.size() == 32);
  CHECK(verify_table(6).checks.size() == 16);
  // two rows instantiate only at a = 6
  CHECK(verify_table(7, 4).checks.size() == 23);
  CHECK(verify_table(7, 8).checks.size() == 25);
}

TEST_CASE("raising the bound keeps table 7 green") {
  auto rep = verify_table(7, 8);
  CHECK(rep.passed() == static_cast<long long>(rep.checks.size()));
}

TEST_CASE("failure accounting") {
  TableReport rep{7, {}};
  rep.checks.push_back({"a", true, "x", "x"});
  rep.checks.push_back({"b", false, "x", "y"});
  CHECK(rep.passed() == 1);
  CHECK(rep.failed() == 1);
  CHECK_FALSE(all_passed({rep}));
}

TEST_CASE("unknown suite ids are rejected") {
  CHECK_THROWS_AS(verify_table(1), error);
  CHECK_THROWS_AS(verify_table(9), error);
  CHECK_THROWS_AS(verify_table(6, 0), error);
}
