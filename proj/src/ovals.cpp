#include "eh/ovals.hpp"

#include <algorithm>

namespace eh {
namespace {

bool no_tau_family(Family f) { return f == Family::E || f == Family::F; }

}  // namespace

GroupSpec tau_extension(const TriangularAction& a) {
  const GroupSpec& s = a.spec;
  if (no_tau_family(s.family))
    fail(errc::family_unsupported, "families E and F carry no tau involution");
  return GroupSpec(s.family, s.n, s.params, s.variant, true);
}

GroupSpec build_full_group(const TriangularAction& a) {
  if (no_tau_family(a.spec.family))
    fail(errc::family_unsupported, "families E and F carry no tau involution");
  if (!case_is_full(*a.kase))
    fail(errc::not_full, "case " + a.kase->label + " is not full");
  return tau_extension(a);
}

std::array<Element, 3> boundary_reflections(const GroupSpec& full,
                                            const TriangularAction& a) {
  if (!full.tau) fail(errc::bad_parameter, "reflections need the tau-extension");
  auto th = theta_images(a);
  Element t = gen_tau(full);
  // tau must invert the first two boundary images; the third is only
  // conjugated into the reversed product
  for (int i = 0; i < 2; ++i)
    if (!(conjugate(full, t, th[i]) == inv(full, th[i])))
      fail(errc::spec_mismatch, "tau fails to invert a boundary image");
  std::array<Element, 3> refl{mul(full, th[0], t), t, mul(full, t, th[1])};
  Element one = identity(full);
  for (const auto& r : refl)
    if (!(mul(full, r, r) == one))
      fail(errc::spec_mismatch, "boundary reflection is not an involution");
  auto sig = signature_of(*a.kase);
  const long per[3] = {sig.k(), sig.l(), sig.m()};
  for (int i = 0; i < 3; ++i)
    if (order(full, mul(full, refl[i], refl[(i + 1) % 3])) != per[i])
      fail(errc::spec_mismatch, "link order does not match the signature");
  return refl;
}

std::array<int, 3> reflection_conjugacy(const TriangularSignature& sig) {
  const long per[3] = {sig.k(), sig.l(), sig.m()};
  std::array<int, 3> id{0, 1, 2};
  auto join = [&](int x, int y) {
    int lo = std::min(id[x], id[y]), hi = std::max(id[x], id[y]);
    for (auto& v : id)
      if (v == hi) v = lo;
  };
  for (int i = 0; i < 3; ++i)
    if (per[i] % 2) join(i, (i + 1) % 3);
  std::array<int, 3> remap{-1, -1, -1};
  std::array<int, 3> out{};
  int next = 0;
  for (int i = 0; i < 3; ++i) {
    if (remap[id[i]] < 0) remap[id[i]] = next++;
    out[i] = remap[id[i]];
  }
  return out;
}

std::array<long long, 3> centralizer_image_sizes(const GroupSpec& full,
                                                 const TriangularAction& a) {
  auto refl = boundary_reflections(full, a);
  auto sig = signature_of(*a.kase);
  const std::array<long, 3> per{sig.k(), sig.l(), sig.m()};
  int nodd = 0;
  for (long p : per) nodd += p % 2 ? 1 : 0;
  // rotate a single odd period into the last slot, a single even one into
  // the first; the closure recipes below assume that normal position
  int sigma = 0;
  if (nodd == 1) {
    for (int i = 0; i < 3; ++i)
      if (per[i] % 2) sigma = (i + 1) % 3;
  } else if (nodd == 2) {
    for (int i = 0; i < 3; ++i)
      if (per[i] % 2 == 0) sigma = i;
  }
  std::array<Element, 3> C;
  std::array<long, 3> rp;
  for (int j = 0; j < 3; ++j) {
    C[j] = refl[(j + sigma) % 3];
    rp[j] = per[(j + sigma) % 3];
  }
  Element p01 = mul(full, C[0], C[1]);
  Element p12 = mul(full, C[1], C[2]);
  Element p20 = mul(full, C[2], C[0]);
  auto closure = [&](std::vector<Element> gens) {
    return static_cast<long long>(subgroup_generated(full, gens).size());
  };
  std::array<long long, 3> nur{};
  if (rp[0] % 2 && rp[1] % 2 && rp[2] % 2) {
    long k = (rp[0] - 1) / 2, l = (rp[1] - 1) / 2, m = (rp[2] - 1) / 2;
    Element w = mul(full, power(full, p20, m),
                    mul(full, power(full, p12, l), power(full, p01, k)));
    long long v = closure({C[0], w});
    nur = {v, v, v};
  } else if (rp[0] % 2 == 0 && rp[1] % 2 && rp[2] % 2) {
    long k = rp[0] / 2, l = (rp[1] - 1) / 2, m = (rp[2] - 1) / 2;
    Element w = power(full, p20, m);
    w = mul(full, w, power(full, p12, l));
    w = mul(full, w, power(full, inv(full, p01), k));
    w = mul(full, w, power(full, inv(full, p12), l));
    w = mul(full, w, power(full, inv(full, p20), m));
    long long v = closure({C[0], power(full, p01, k), w});
    nur = {v, v, v};
  } else if (rp[0] % 2 == 0 && rp[1] % 2 == 0 && rp[2] % 2) {
    long k = rp[0] / 2, l = rp[1] / 2, m = (rp[2] - 1) / 2;
    Element w = mul(full, power(full, p20, m),
                    mul(full, power(full, inv(full, p12), l),
                        power(full, inv(full, p20), m)));
    long long v0 = closure({C[0], power(full, p01, k), w});
    long long v1 = closure({C[1], power(full, p01, k), power(full, p12, l)});
    nur = {v0, v1, v0};
  } else if (rp[0] % 2 == 0 && rp[1] % 2 == 0 && rp[2] % 2 == 0) {
    long k = rp[0] / 2, l = rp[1] / 2, m = rp[2] / 2;
    long long v0 = closure({C[0], power(full, p01, k), power(full, inv(full, p20), m)});
    long long v1 = closure({C[1], power(full, p01, k), power(full, p12, l)});
    long long v2 = closure({C[2], power(full, inv(full, p20), m), power(full, p12, l)});
    nur = {v0, v1, v2};
  } else {
    fail(errc::spec_mismatch, "period parities failed to normalize");
  }
  std::array<long long, 3> nu{};
  for (int j = 0; j < 3; ++j) nu[(j + sigma) % 3] = nur[j];
  return nu;
}

std::array<long long, 3> centralizer_image_sizes_closed(const GroupSpec& full,
                                                        const TriangularAction& a) {
  auto sig = signature_of(*a.kase);
  if (sig.k() % 2 || sig.l() % 2 || sig.m() % 2)
    fail(errc::not_applicable, "closed centralizer-image forms need even periods");
  auto th = theta_images(a);
  long k = sig.k() / 2, l = sig.l() / 2, m = sig.m() / 2;
  Element g12 = mul(full, th[0], th[1]);
  long long n0 =
      4 * order(full, mul(full, power(full, th[0], k), power(full, g12, m)));
  long long n1 =
      4 * order(full, mul(full, power(full, th[0], k), power(full, th[1], l)));
  long long n2 =
      4 * order(full, mul(full, power(full, g12, m), power(full, th[1], l)));
  return {n0, n1, n2};
}

bool merged_classes_odd_n(const GroupSpec& full, const TriangularAction& a) {
  if (a.kase->type != ActionType::t244)
    fail(errc::not_applicable, "class fusion applies to the quadrilateral types");
  auto refl = boundary_reflections(full, a);
  return are_conjugate(full, refl[1], refl[0]);
}

OvalReport count_ovals(const TriangularAction& a) {
  long g = genus_of(a);
  if (g <= 5)
    fail(errc::genus_too_small, "oval counts need genus above 5, got " + std::to_string(g));
  GroupSpec full = build_full_group(a);
  auto refl = boundary_reflections(full, a);
  auto nu = centralizer_image_sizes(full, a);
  std::array<long long, 3> vt{};
  for (int i = 0; i < 3; ++i)
    vt[i] = static_cast<long long>(centralizer(full, refl[i]).size());
  for (int i = 0; i < 3; ++i)
    if (nu[i] <= 0 || vt[i] % nu[i] != 0)
      fail(errc::spec_mismatch, "centralizer image size does not divide the centralizer");

  OvalReport rep;
  rep.genus = g;
  rep.group_order = full.order();

  // conjugacy classes of orientation-reversing involutions
  Element one = identity(full);
  std::vector<char> seen(static_cast<size_t>(full.order()), 0);
  for (const auto& h : enumerate(full)) {
    if (h.p != 1 || !(mul(full, h, h) == one)) continue;
    if (seen[static_cast<size_t>(element_index(full, h))]) continue;
    auto cls = conjugacy_class(full, h);
    for (const auto& x : cls) seen[static_cast<size_t>(element_index(full, x))] = 1;
    rep.classes.push_back({h, static_cast<long long>(cls.size()), 0, false});
  }

  // one contribution per reflection class of the boundary
  auto lam = reflection_conjugacy(signature_of(*a.kase));
  for (int cls = 0; cls < 3; ++cls) {
    int r = -1;
    for (int i = 0; i < 3 && r < 0; ++i)
      if (lam[i] == cls) r = i;
    if (r < 0) continue;
    bool placed = false;
    for (auto& sc : rep.classes) {
      if (!are_conjugate(full, sc.rep, refl[r])) continue;
      sc.ovals += vt[r] / nu[r];
      sc.has_fixed_points = true;
      placed = true;
      break;
    }
    if (!placed)
      fail(errc::spec_mismatch, "reflection missing from the involution classes");
  }

  for (const auto& sc : rep.classes) rep.total_ovals += sc.ovals;
  if (rep.total_ovals < 0 || rep.total_ovals > g + 1)
    fail(errc::spec_mismatch, "total oval count violates the genus bound");
  return rep;
}

}  // namespace eh
