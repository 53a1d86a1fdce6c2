#include <doctest.h>

#include "eh/kernels.hpp"

using namespace eh;

TEST_CASE("serial and parallel sweeps agree") {
  auto s = sweep_actions_serial(400);
  auto p = sweep_actions_parallel(400);
  CHECK(sweep_equal(s, p));
  CHECK(s.gmin == 6);
  CHECK(s.gmax == 400);
  CHECK(s.buckets.size() == 395);
}

TEST_CASE("sweep matches the statement route genus by genus") {
  auto s = sweep_actions_serial(500);
  long mismatches = 0;
  for (long g = 6; g <= 500; ++g) {
    auto expect = symmetric_actions(g);
    if (s.at(g) != expect) {
      ++mismatches;
      CAPTURE(g);
      CHECK(s.at(g) == expect);
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("sweep bucket spot values") {
  auto s = sweep_actions_serial(130);
  CHECK(s.at(7).size() == 8);
  CHECK(s.at(10).size() == 3);
  CHECK(s.at(11).size() == 1);
  CHECK(s.at(121).size() == 1);
  CHECK(s.at(121)[0].case_label == "6.6");
  CHECK(s.at(12).empty());
  CHECK_THROWS_AS((void)s.at(200), error);
  CHECK_THROWS_AS((void)sweep_actions_serial(5), error);
}
