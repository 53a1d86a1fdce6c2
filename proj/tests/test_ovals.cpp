#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "eh/ovals.hpp"

using namespace eh;

namespace {

TriangularAction mk(const char* cs, Family f, Variant v, long n) {
  return make_action(cs, f, v, n);
}

std::vector<long long> fixed_ovals(const OvalReport& rep) {
  std::vector<long long> out;
  for (const auto& sc : rep.classes)
    if (sc.has_fixed_points) out.push_back(sc.ovals);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST_CASE("tau extension gates") {
  auto e_case = mk("3.3", Family::E, {0, 0}, 2);
  CHECK_THROWS_AS((void)tau_extension(e_case), error);
  CHECK_THROWS_AS((void)build_full_group(e_case), error);
  try {
    (void)build_full_group(e_case);
  } catch (const error& e) {
    CHECK(e.code() == errc::family_unsupported);
  }

  auto partial = mk("4.2", Family::A, {0, 0}, 2);
  auto ext = tau_extension(partial);
  CHECK(ext.order() == 64);
  try {
    (void)build_full_group(partial);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_full);
  }

  // full case but tiny kernel genus
  try {
    (void)count_ovals(mk("4.4", Family::A, {0, 0}, 2));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::genus_too_small);
  }
}

TEST_CASE("reflection conjugacy partitions") {
  CHECK(reflection_conjugacy(TriangularSignature(2, 4, 8)) == std::array<int, 3>{0, 1, 2});
  CHECK(reflection_conjugacy(TriangularSignature(4, 6, 6)) == std::array<int, 3>{0, 1, 2});
  CHECK(reflection_conjugacy(TriangularSignature(2, 3, 12)) == std::array<int, 3>{0, 1, 1});
  CHECK(reflection_conjugacy(TriangularSignature(4, 3, 6)) == std::array<int, 3>{0, 1, 1});
  CHECK(reflection_conjugacy(TriangularSignature(4, 3, 12)) == std::array<int, 3>{0, 1, 1});
  CHECK(reflection_conjugacy(TriangularSignature(3, 3, 5)) == std::array<int, 3>{0, 0, 0});
}

TEST_CASE("frozen centralizer image sizes, quadrilateral families") {
  struct Row {
    const char* cs;
    Family f;
    Variant v;
    long n;
    std::array<long long, 3> nu;
  };
  const Row rows[] = {
      {"4.2", Family::A, {0, 0}, 2, {4, 4, 4}},
      {"4.2", Family::A, {1, 0}, 3, {4, 4, 4}},
      {"4.2", Family::B, {0, 0}, 2, {4, 4, 4}},
      {"4.2", Family::B, {0, 1}, 4, {4, 4, 4}},
      {"4.3", Family::A, {0, 0}, 2, {8, 8, 8}},
      {"4.3", Family::A, {1, 0}, 4, {8, 8, 16}},
      {"4.3", Family::B, {1, 0}, 2, {8, 8, 8}},
      {"4.3", Family::B, {1, 1}, 2, {8, 8, 4}},
      {"4.3", Family::B, {0, 0}, 4, {8, 8, 8}},
      {"4.3", Family::B, {0, 1}, 4, {8, 8, 16}},
      {"4.4", Family::A, {0, 0}, 4, {8, 16, 8}},
      {"4.4", Family::A, {1, 0}, 4, {8, 32, 8}},
      {"4.4", Family::B, {0, 0}, 4, {8, 16, 8}},
      {"4.5", Family::A, {0, 0}, 2, {4, 8, 8}},
      {"4.5", Family::A, {1, 0}, 2, {4, 8, 8}},
      {"4.5", Family::B, {0, 0}, 4, {4, 8, 8}},
      {"4.6", Family::A, {0, 0}, 2, {8, 8, 4}},
      {"4.6", Family::A, {1, 0}, 4, {8, 8, 4}},
      {"4.6", Family::B, {0, 0}, 4, {8, 8, 4}},
      {"4.6", Family::B, {1, 0}, 2, {8, 8, 4}},
  };
  for (const auto& r : rows) {
    auto act = mk(r.cs, r.f, r.v, r.n);
    auto full = tau_extension(act);
    auto nu = centralizer_image_sizes(full, act);
    CAPTURE(r.cs);
    CAPTURE(r.n);
    CHECK(nu == r.nu);
  }
}

TEST_CASE("frozen centralizer orders, quadrilateral families") {
  struct Row {
    const char* cs;
    Family f;
    Variant v;
    long n;
    std::array<long long, 3> vt;
  };
  const Row rows[] = {
      {"4.2", Family::A, {0, 0}, 2, {16, 16, 8}},
      {"4.2", Family::A, {0, 0}, 3, {12, 12, 12}},
      {"4.2", Family::B, {0, 0}, 2, {8, 8, 8}},
      {"4.3", Family::A, {0, 0}, 2, {16, 16, 16}},
      {"4.3", Family::B, {1, 1}, 2, {8, 8, 16}},
      {"4.3", Family::B, {1, 0}, 2, {8, 8, 8}},
      {"4.4", Family::A, {0, 0}, 4, {32, 64, 16}},
      {"4.4", Family::A, {1, 0}, 4, {32, 32, 16}},
      {"4.4", Family::B, {0, 0}, 4, {16, 32, 16}},
      {"4.5", Family::A, {0, 0}, 2, {16, 16, 8}},
      {"4.5", Family::B, {0, 0}, 4, {16, 16, 16}},
      {"4.6", Family::A, {0, 0}, 2, {16, 16, 8}},
      {"4.6", Family::B, {0, 0}, 4, {16, 16, 16}},
  };
  for (const auto& r : rows) {
    auto act = mk(r.cs, r.f, r.v, r.n);
    auto full = tau_extension(act);
    auto refl = boundary_reflections(full, act);
    std::array<long long, 3> vt{};
    for (int i = 0; i < 3; ++i)
      vt[i] = static_cast<long long>(centralizer(full, refl[i]).size());
    CAPTURE(r.cs);
    CAPTURE(r.n);
    CHECK(vt == r.vt);
  }
}

TEST_CASE("closed centralizer image forms match the closures") {
  struct Row {
    const char* cs;
    Family f;
    Variant v;
    long n;
  };
  const Row rows[] = {
      {"4.2", Family::A, {0, 0}, 3}, {"4.3", Family::B, {1, 0}, 2},
      {"4.4", Family::A, {0, 0}, 4}, {"4.4", Family::A, {1, 0}, 4},
      {"4.4", Family::B, {0, 0}, 8}, {"4.5", Family::A, {0, 0}, 2},
      {"4.5", Family::B, {0, 0}, 4}, {"4.6", Family::A, {1, 0}, 4},
      {"6.2", Family::C, {0, 0}, 4}, {"6.2", Family::C, {1, 0}, 3},
      {"6.2", Family::D, {0, 0}, 6}, {"6.6", Family::C, {1, 0}, 2},
      {"6.8", Family::C, {0, 0}, 2}, {"6.8", Family::D, {0, 1}, 3},
  };
  for (const auto& r : rows) {
    auto act = mk(r.cs, r.f, r.v, r.n);
    auto full = tau_extension(act);
    CAPTURE(r.cs);
    CAPTURE(r.n);
    CHECK(centralizer_image_sizes(full, act) == centralizer_image_sizes_closed(full, act));
  }
  auto odd = mk("6.3", Family::C, {1, 0}, 2);
  auto full = tau_extension(odd);
  CHECK_THROWS_AS((void)centralizer_image_sizes_closed(full, odd), error);
}

TEST_CASE("oval counts per symmetry class") {
  struct Row {
    const char* cs;
    Family f;
    Variant v;
    long n;
    long genus;
    std::vector<long long> ovals;  // descending
  };
  const Row rows[] = {
      {"4.4", Family::B, {0, 0}, 8, 17, {4, 4, 2}},
      {"4.4", Family::B, {0, 1}, 8, 17, {4, 4, 2}},
      {"4.4", Family::A, {0, 0}, 4, 9, {4, 4, 2}},
      {"4.4", Family::A, {1, 0}, 4, 9, {4, 2, 1}},
      {"6.2", Family::C, {0, 0}, 4, 17, {4, 4, 2}},
      {"6.2", Family::C, {1, 0}, 3, 10, {3, 3, 1}},
      {"6.8", Family::D, {0, 0}, 6, 37, {6, 4}},
      {"6.8", Family::D, {0, 1}, 3, 10, {3, 2}},
      {"6.3", Family::C, {0, 0}, 4, 9, {2, 2}},
      {"6.3", Family::C, {1, 0}, 6, 19, {3, 3}},
      {"6.5", Family::D, {0, 0}, 12, 73, {6, 2}},
      {"6.5", Family::D, {1, 1}, 6, 19, {3, 1}},
      {"4.5", Family::B, {0, 0}, 4, 13, {4, 2, 2}},
      {"4.5", Family::B, {0, 1}, 4, 13, {4, 2, 2}},
      {"6.2", Family::D, {0, 0}, 6, 13, {2, 2, 2}},
      {"6.2", Family::D, {1, 0}, 9, 28, {3, 3, 1}},
      {"6.8", Family::C, {0, 0}, 2, 13, {4, 2}},
      {"4.5", Family::A, {0, 0}, 2, 7, {4, 2, 1}},
      {"4.5", Family::A, {1, 0}, 2, 7, {4, 2, 1}},
      {"6.3", Family::D, {0, 0}, 12, 25, {6, 2}},
      {"6.3", Family::D, {1, 1}, 6, 7, {3, 1}},
      {"6.5", Family::C, {1, 0}, 2, 7, {1, 1}},
      {"6.6", Family::C, {1, 0}, 2, 11, {3, 1}},
      {"6.6", Family::D, {0, 0}, 12, 121, {6, 6}},
      {"6.6", Family::D, {1, 1}, 6, 31, {3, 3}},
  };
  for (const auto& r : rows) {
    auto act = mk(r.cs, r.f, r.v, r.n);
    auto rep = count_ovals(act);
    CAPTURE(r.cs);
    CAPTURE(r.n);
    CHECK(rep.genus == r.genus);
    CHECK(rep.group_order == 2 * act.spec.order());
    CHECK(fixed_ovals(rep) == r.ovals);
    long long sum = std::accumulate(r.ovals.begin(), r.ovals.end(), 0LL);
    CHECK(rep.total_ovals == sum);
    CHECK(rep.total_ovals <= r.genus + 1);
    for (const auto& sc : rep.classes)
      if (!sc.has_fixed_points) CHECK(sc.ovals == 0);
  }
}

TEST_CASE("class fusion at odd levels") {
  struct Probe {
    long n;
    bool merged;
  };
  for (const auto& p : {Probe{2, false}, Probe{3, true}, Probe{4, false}, Probe{5, true}}) {
    auto act = mk("4.2", Family::A, {0, 0}, p.n);
    auto full = tau_extension(act);
    CAPTURE(p.n);
    CHECK(merged_classes_odd_n(full, act) == p.merged);
  }
  {
    auto act = mk("4.2", Family::B, {0, 0}, 2);
    auto full = tau_extension(act);
    CHECK(!merged_classes_odd_n(full, act));
  }

  // the explicit fusing conjugator at odd n
  for (int eps : {0, 1}) {
    long n = 3;
    auto act = mk("4.2", Family::A, {eps, 0}, n);
    auto full = tau_extension(act);
    auto refl = boundary_reflections(full, act);
    Element h = mul(full, power(full, gen_first(full), (n - 1) / 2),
                    power(full, gen_c(full), eps ? 1 : 3));
    bool fuses = conjugate(full, h, refl[1]) == refl[0] ||
                 conjugate(full, h, refl[0]) == refl[1];
    CAPTURE(eps);
    CHECK(fuses);
  }

  auto hexa = mk("6.2", Family::C, {0, 0}, 4);
  auto full = tau_extension(hexa);
  CHECK_THROWS_AS((void)merged_classes_odd_n(full, hexa), error);
}
