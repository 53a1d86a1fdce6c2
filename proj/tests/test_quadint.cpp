#include <doctest.h>

#include <set>

#include "eh/quadint.hpp"

using namespace eh;

namespace {
QuadInt gi(long long a, long long b) { return {Ring::gauss, a, b}; }
QuadInt ei(long long a, long long b) { return {Ring::eisenstein, a, b}; }
}  // namespace

TEST_CASE("quadratic integer arithmetic") {
  CHECK(mul(gi(0, 1), gi(0, 1)) == gi(-1, 0));
  CHECK(norm(gi(3, 2)) == 13);

  CHECK(mul(ei(0, 1), ei(0, 1)) == ei(-1, 1));  // w^2 = w - 1
  CHECK(conj(ei(0, 1)) == ei(1, -1));
  CHECK(norm(ei(1, 1)) == 3);
  CHECK(norm(ei(2, 1)) == 7);
  CHECK(pow(ei(0, 1), 3) == ei(-1, 0));  // w^3 = -1
  CHECK(pow(ei(0, 1), 6) == ei(1, 0));

  CHECK(units(Ring::gauss).size() == 4);
  CHECK(units(Ring::eisenstein).size() == 6);
  for (auto u : units(Ring::eisenstein)) CHECK(norm(u) == 1);
  CHECK(is_unit(ei(1, -1)));
  CHECK_FALSE(is_unit(ei(1, 1)));
}

TEST_CASE("split primes") {
  CHECK(is_split(2, Ring::gauss));
  CHECK(is_split(5, Ring::gauss));
  CHECK(is_split(13, Ring::gauss));
  CHECK_FALSE(is_split(3, Ring::gauss));
  CHECK_FALSE(is_split(7, Ring::gauss));
  CHECK(is_split(3, Ring::eisenstein));
  CHECK(is_split(7, Ring::eisenstein));
  CHECK(is_split(13, Ring::eisenstein));
  CHECK_FALSE(is_split(2, Ring::eisenstein));
  CHECK_FALSE(is_split(5, Ring::eisenstein));
  CHECK_THROWS_AS((void)is_split(9, Ring::gauss), error);

  auto s2 = split(2, Ring::gauss);
  CHECK(s2.first == gi(1, 1));
  CHECK(s2.second == gi(1, -1));
  auto s5 = split(5, Ring::gauss);
  CHECK(s5.first == gi(2, 1));
  CHECK(s5.second == gi(2, -1));
  auto s7 = split(7, Ring::eisenstein);
  CHECK(s7.first == ei(2, 1));
  CHECK(s7.second == ei(3, -1));
  CHECK(mul(s7.first, s7.second) == ei(7, 0));
  CHECK_THROWS_AS((void)split(7, Ring::gauss), error);
  CHECK_THROWS_AS((void)split(9, Ring::gauss), error);
}

TEST_CASE("quotient invariants via Smith form") {
  // rational primes p^k stay (p^k, p^k)
  CHECK(quotient_invariants(gi(25, 0)) == AbelianInvariants{25, 25});
  CHECK(quotient_invariants(ei(27, 0)) == AbelianInvariants{27, 27});
  // ramified power: (1+i)^3
  auto p3 = pow(gi(1, 1), 3);
  CHECK(quotient_invariants(p3) == AbelianInvariants{2, 4});
  // split prime factor is cyclic
  CHECK(quotient_invariants(gi(2, 1)) == AbelianInvariants{1, 5});
  CHECK(quotient_invariants(ei(2, 1)) == AbelianInvariants{1, 7});
  for (auto z : {gi(3, 2), p3, gi(4, 2)}) {
    auto v = quotient_invariants(z);
    CHECK(v.d1 * v.d2 == norm(z));
    CHECK(v.d2 % v.d1 == 0);
  }
  auto ve = quotient_invariants(ei(4, 1));
  CHECK(ve.d1 * ve.d2 == norm(ei(4, 1)));
}

TEST_CASE("element orders inside quotients") {
  auto pi = gi(1, 1);
  CHECK(quotient_order(pi, gi(1, -1)) == 1);  // 1-i is a unit times 1+i
  CHECK(quotient_order(pi, gi(0, 1)) == 2);
  auto p3 = pow(pi, 3);
  CHECK(quotient_order(p3, gi(1, -1)) == 2);
  CHECK(quotient_order(p3, gi(0, 1)) == 4);
  CHECK(quotient_order(p3, gi(1, 0)) == 4);
  CHECK(quotient_coords(p3, p3) == std::array<long long, 2>{0, 0});
}

TEST_CASE("Sylow decomposition types") {
  auto t = sylow_types(5, 2, Ring::gauss);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == AbelianInvariants{1, 25});
  CHECK(t[1] == AbelianInvariants{5, 5});
  CHECK(sylow_types(5, 0, Ring::gauss) == std::vector<AbelianInvariants>{{1, 1}});
  CHECK(sylow_types(13, 4, Ring::gauss).size() == 3);
  CHECK(sylow_types(7, 3, Ring::eisenstein).size() == 2);
  CHECK_THROWS_AS((void)sylow_types(3, 2, Ring::gauss), error);
  CHECK_THROWS_AS((void)sylow_types(7, 2, Ring::gauss), error);
  CHECK_THROWS_AS((void)sylow_types(5, 2, Ring::eisenstein), error);
}

TEST_CASE("twist residues") {
  CHECK(solve_twist(4, 2) == std::vector<long long>{1});
  CHECK(solve_twist(4, 5) == std::vector<long long>{2, 3});
  auto r = solve_twist(6, 3);
  CHECK(std::set<long long>(r.begin(), r.end()).count(2) == 1);
  CHECK(solve_twist(4, 3).empty());
  CHECK(solve_twist(4, 4).empty());
  CHECK(solve_twist(3, 9).empty());

  // the soluble predicate matches the root search everywhere
  for (long long q = 1; q <= 500; ++q) {
    for (long t : {4L, 3L, 6L}) {
      bool roots = !solve_twist(t, q).empty();
      CHECK(roots == twist_soluble(t, q));
    }
  }
}
