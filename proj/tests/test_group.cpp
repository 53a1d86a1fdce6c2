#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "eh/group.hpp"
#include "support/coset_enum.hpp"

using namespace eh;

namespace {

std::vector<std::vector<int>> tc_relators(const GroupSpec& g) {
  std::vector<std::vector<int>> out;
  for (const auto& w : relator_words(g)) {
    std::vector<int> r;
    for (auto [gen, k] : w) {
      int id = static_cast<int>(gen) + 1;
      int s = k < 0 ? -id : id;
      for (long long j = 0; j < std::llabs(k); ++j) r.push_back(s);
    }
    out.push_back(std::move(r));
  }
  return out;
}

long long closed_form_order(Family f, long n, bool tau) {
  long long base = 0;
  switch (f) {
    case Family::A: base = 8 * n * n; break;
    case Family::B: base = 4 * n * n; break;
    case Family::C: base = 12 * n * n; break;
    case Family::D: base = 4 * n * n; break;
    case Family::E: base = 6 * n * n; break;
    case Family::F: base = 2 * n * n; break;
  }
  return tau ? 2 * base : base;
}

bool two_bit(Family f) { return f == Family::B || f == Family::D || f == Family::F; }
bool n_ok(Family f, long n) {
  if (f == Family::B) return n % 2 == 0;
  if (f == Family::D || f == Family::F) return n % 3 == 0;
  return true;
}

std::vector<Params> param_space(Family f) {
  std::vector<Params> ps;
  for (int b0 = 0; b0 < 2; ++b0)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int b2 = 0; b2 < 2; ++b2) {
        Params p;
        if (f == Family::A || f == Family::B) {
          p.alpha = b0;
          p.gamma = b1;
          p.mu = b2;
        } else if (f == Family::C || f == Family::D) {
          p.alpha = b0;
          p.beta = b1;
          p.mu = b2;
        } else {
          p.beta = b0;
          p.gamma = b1;
          p.mu = b2;
        }
        ps.push_back(p);
      }
  return ps;
}

std::vector<Variant> variant_space(Family f) {
  if (two_bit(f)) return {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  return {{0, 0}, {1, 0}};
}

const std::vector<Family> all_families{Family::A, Family::B, Family::C,
                                       Family::D, Family::E, Family::F};

}  // namespace

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(GroupSpec(Family::A, 0, {}, {}), error);
  CHECK_THROWS_AS(GroupSpec(Family::B, 3, {}, {}), error);
  CHECK_THROWS_AS(GroupSpec(Family::D, 4, {}, {}), error);
  CHECK_THROWS_AS(GroupSpec(Family::F, 5, {}, {}), error);
  CHECK_THROWS_AS(GroupSpec(Family::A, 2, Params{0, 1, 0, 0}, {}), error);
  CHECK_THROWS_AS(GroupSpec(Family::C, 2, Params{0, 0, 1, 0}, {}), error);
  CHECK_THROWS_AS(GroupSpec(Family::E, 2, Params{1, 0, 0, 0}, {}), error);
  CHECK_THROWS_AS(GroupSpec(Family::A, 2, {}, Variant{0, 1}), error);
  CHECK_THROWS_AS(GroupSpec(Family::E, 3, {}, {}, true), error);
  CHECK_THROWS_AS(GroupSpec(Family::F, 3, {}, {}, true), error);
}

TEST_CASE("orders match the closed forms") {
  for (Family f : all_families) {
    for (long n = 1; n <= 8; ++n) {
      if (!n_ok(f, n)) continue;
      for (const auto& p : param_space(f))
        for (const auto& v : variant_space(f))
          for (bool tau : {false, true}) {
            if (tau && (f == Family::E || f == Family::F)) continue;
            GroupSpec g(f, n, p, v, tau);
            CHECK(g.order() == closed_form_order(f, n, tau));
          }
    }
  }
  CHECK(GroupSpec(Family::A, 2, {}, {}).order() == 32);
  CHECK(GroupSpec(Family::D, 6, {}, {}).order() == 144);
  CHECK(GroupSpec(Family::C, 2, {}, {}, true).order() == 96);
}

TEST_CASE("element normal forms round-trip") {
  GroupSpec g(Family::C, 3, Params{0, 1, 0, 0}, Variant{1, 0}, true);
  REQUIRE(relators_hold(g));
  for (long long i = 0; i < g.order(); ++i) {
    auto x = element_at(g, i);
    CHECK(element_index(g, x) == i);
    CHECK(mul(g, x, inv(g, x)) == identity(g));
    CHECK(mul(g, inv(g, x), x) == identity(g));
  }
  CHECK(to_text(g, identity(g)) == "1");
  CHECK(to_text(g, gen_first(g)) == "x");
  CHECK(to_text(g, mul(g, gen_first(g), gen_rho(g))) == "x \xcf\x81");
}

TEST_CASE("central rho and twist powers") {
  for (Family f : all_families) {
    long n = (f == Family::D || f == Family::F) ? 3 : 2;
    for (int mu : {0, 1}) {
      Params p;
      if (f == Family::A || f == Family::B)
        p = Params{0, 0, 1, mu};
      else if (f == Family::C || f == Family::D)
        p = Params{0, 1, 0, mu};
      else
        p = Params{0, 1, 1, mu};
      GroupSpec g(f, n, p, {}, false);
      auto rho = gen_rho(g);
      CHECK(order(g, rho) == 2);
      for (auto h : {gen_first(g), gen_second(g), gen_c(g)})
        CHECK(mul(g, h, rho) == mul(g, rho, h));
      CHECK(power(g, gen_c(g), g.tc) == (mu ? rho : identity(g)));
      CHECK(order(g, gen_c(g)) == (mu ? 2 * g.tc : g.tc));
    }
  }
}

TEST_CASE("variant bit fixes the translation wrap") {
  for (int eps : {0, 1}) {
    GroupSpec a(Family::A, 4, {}, Variant{eps, 0});
    auto rho = gen_rho(a);
    CHECK(power(a, gen_first(a), 4) == (eps ? rho : identity(a)));
    CHECK(power(a, gen_second(a), 4) == (eps ? rho : identity(a)));
  }
  // family E binds the bit on the second translation; conjugating
  // y^n = rho^eps by c gives x^n = rho^(eps+n*beta)
  for (int eps : {0, 1})
    for (int beta : {0, 1})
      for (long n : {4L, 5L}) {
        GroupSpec g(Family::E, n, Params{0, beta, 0, 0}, Variant{eps, 0});
        auto rho = gen_rho(g);
        CHECK(power(g, gen_second(g), n) == (eps ? rho : identity(g)));
        int wx = (eps + static_cast<int>(n % 2) * beta) % 2;
        CHECK(power(g, gen_first(g), n) == (wx ? rho : identity(g)));
      }
}

TEST_CASE("coset enumeration confirms consistent presentations") {
  for (Family f : all_families) {
    std::vector<long> ns;
    if (f == Family::B)
      ns = {2, 4};
    else if (f == Family::D || f == Family::F)
      ns = {3};
    else
      ns = {1, 2, 3};
    for (long n : ns)
      for (const auto& p : param_space(f))
        for (const auto& v : variant_space(f))
          for (bool tau : {false, true}) {
            if (tau && (f == Family::E || f == Family::F)) continue;
            GroupSpec g(f, n, p, v, tau);
            auto t = eh_test::coset_enumerate(tau ? 5 : 4, tc_relators(g), 5000);
            if (relators_hold(g)) {
              CHECK(t.size == g.order());
              CHECK(eh_test::tc_class_count(t) == conjugacy_class_count(g));
            } else {
              CHECK(t.size < g.order());
            }
          }
  }
}

TEST_CASE("subgroup closure and centralizers") {
  GroupSpec g(Family::A, 4, {}, Variant{1, 0});
  CHECK(subgroup_generated(g, {gen_first(g)}).size() == 8);  // x^4 = rho
  CHECK(subgroup_generated(g, {gen_rho(g)}).size() == 2);
  CHECK(subgroup_generated(g, {gen_first(g), gen_second(g), gen_c(g)}).size() == g.order());
  CHECK(centralizer(g, identity(g)).size() == static_cast<size_t>(g.order()));
  CHECK(centralizer(g, gen_rho(g)).size() == static_cast<size_t>(g.order()));
  auto cls = conjugacy_class(g, gen_first(g));
  for (const auto& h : cls) CHECK(are_conjugate(g, gen_first(g), h));
  CHECK(cls.size() * centralizer(g, gen_first(g)).size() == static_cast<size_t>(g.order()));
}

TEST_CASE("homomorphism propagation") {
  GroupSpec g(Family::C, 2, Params{0, 1, 0, 0}, {});
  std::vector<Element> gens{gen_first(g), gen_second(g), gen_c(g), gen_rho(g)};
  auto idh = hom_from_images(g, gens, g, gens);
  REQUIRE(idh.has_value());
  CHECK(idh->total());
  CHECK(idh->injective());
  CHECK(idh->surjective());

  // conjugation by c is an automorphism
  auto co = gen_c(g);
  std::vector<Element> im;
  for (const auto& x : gens) im.push_back(conjugate(g, co, x));
  auto ch = hom_from_images(g, gens, g, im);
  REQUIRE(ch.has_value());
  CHECK(ch->total());
  CHECK(ch->injective());

  // x -> x rho, y -> y, c -> c is not a homomorphism of C with beta = 1
  std::vector<Element> bad{mul(g, gen_first(g), gen_rho(g)), gen_second(g), gen_c(g),
                           gen_rho(g)};
  auto bh = hom_from_images(g, gens, g, bad);
  bool broken = !bh.has_value() || !bh->total() || !bh->injective();
  CHECK(broken);
}

TEST_CASE("reduced quotient invariants") {
  CHECK(reduced_quotient(GroupSpec(Family::A, 3, {}, {})) ==
        ReducedQuotient{{3, 3}, 4});
  CHECK(reduced_quotient(GroupSpec(Family::D, 6, {}, {})) ==
        ReducedQuotient{{2, 6}, 6});
  CHECK(reduced_quotient(GroupSpec(Family::B, 4, {}, {})) ==
        ReducedQuotient{{2, 4}, 4});
  CHECK(reduced_quotient(GroupSpec(Family::F, 6, {}, {})) ==
        ReducedQuotient{{2, 6}, 3});
}

TEST_CASE("variant labels") {
  CHECK(variant_label(Family::A, Variant{1, 0}) == "1");
  CHECK(variant_label(Family::B, Variant{0, 1}) == "01");
  REQUIRE(parse_variant(Family::D, "10").has_value());
  CHECK(*parse_variant(Family::D, "10") == Variant{1, 0});
  CHECK_FALSE(parse_variant(Family::A, "10").has_value());
  CHECK_FALSE(parse_variant(Family::B, "2").has_value());
}
