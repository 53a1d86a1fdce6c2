#include "eh/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace eh {
namespace {

const Variant V0{0, 0}, V1{1, 0};
const Variant W00{0, 0}, W01{0, 1}, W10{1, 0}, W11{1, 1};

// admissible variant bits per congruence column; "one" is the A/C/E side,
// "two" the B/D/F side
struct Cells {
  std::array<std::vector<Variant>, 7> one, two;
};

// (2,4,4): 0 -> n = 0 mod 4, 1 -> n = 2 mod 4, 2 -> n odd
// (2,3,6), (3,3,3): min(n mod 12, 12 - n mod 12)
int column_of(ActionType t, long n) {
  if (t == ActionType::t244) {
    if (n % 2) return 2;
    return n % 4 == 0 ? 0 : 1;
  }
  long r = n % 12;
  return static_cast<int>(std::min(r, 12 - r));
}

// both variants stay admissible at every n, the second side only at even n
Cells cells_244_all(std::vector<Variant> two_at2, bool odd_one) {
  Cells c;
  c.one[0] = {V0, V1};
  c.two[0] = {W00, W01};
  c.one[1] = {V0, V1};
  c.two[1] = std::move(two_at2);
  if (odd_one) c.one[2] = {V0, V1};
  return c;
}

// columns 1..5 alternate between the eps = 1 and eps = 0 branch
Cells cells_alternating(Variant d0, Variant d3, Variant d6, bool dense) {
  Cells c;
  c.one[0] = {V0};
  c.two[0] = {d0};
  c.one[6] = dense ? std::vector<Variant>{V0} : std::vector<Variant>{V1};
  c.two[6] = {d6};
  if (dense) {
    for (int j = 1; j <= 5; ++j) c.one[j] = {V0};
    c.two[3] = {d3};
  } else {
    c.one[2] = {V1};
    c.one[4] = {V0};
  }
  return c;
}

// full alternation with a second-side cell at column 3
Cells cells_alternating_dense2(Variant d0, Variant d3, Variant d6) {
  Cells c;
  c.one[0] = {V0};
  c.two[0] = {d0};
  c.one[1] = {V1};
  c.one[2] = {V0};
  c.one[3] = {V1};
  c.two[3] = {d3};
  c.one[4] = {V0};
  c.one[5] = {V1};
  c.one[6] = {V0};
  c.two[6] = {d6};
  return c;
}

const std::map<std::string, Cells>& cell_table() {
  static const std::map<std::string, Cells> table = [] {
    std::map<std::string, Cells> t;
    t["4.2"] = cells_244_all({W00, W01}, true);
    t["4.3"] = cells_244_all({W10, W11}, false);
    t["4.4"] = cells_244_all({}, false);
    t["4.5"] = cells_244_all({}, false);
    t["4.6"] = cells_244_all({W10, W11}, false);
    t["6.2"] = cells_alternating_dense2(W00, W10, W00);
    t["6.3"] = cells_alternating(W00, {}, W11, false);
    t["6.4"] = cells_alternating(W00, {}, W11, false);
    t["6.5"] = cells_alternating(W00, {}, W11, false);
    t["6.6"] = cells_alternating(W00, {}, W11, false);
    t["6.7"] = cells_alternating_dense2(W00, W11, W00);
    t["6.8"] = cells_alternating(W00, W01, W00, true);
    t["3.2"] = cells_alternating(W00, {}, W11, false);
    t["3.3"] = cells_alternating(W00, W01, W00, true);
    t["3.4"] = cells_alternating(W00, {}, W11, false);
    return t;
  }();
  return table;
}

Params bits244(int alpha, int gamma, int mu) {
  Params p;
  p.alpha = alpha;
  p.gamma = gamma;
  p.mu = mu;
  return p;
}
Params bits236(int alpha, int beta, int mu) {
  Params p;
  p.alpha = alpha;
  p.beta = beta;
  p.mu = mu;
  return p;
}
Params bits333(int beta, int gamma, int mu) {
  Params p;
  p.beta = beta;
  p.gamma = gamma;
  p.mu = mu;
  return p;
}

std::array<Element, 3> theta_of(const GroupSpec& g) {
  auto X = gen_first(g);
  auto Y = gen_second(g);
  auto C = gen_c(g);
  auto P = [&](const Element& a, long long k) { return power(g, a, k); };
  auto M = [&](const Element& a, const Element& b) { return mul(g, a, b); };
  switch (g.family) {
    case Family::A:
      return {M(P(C, -2), X), C, M(inv(g, Y), C)};
    case Family::B:
      return {M(P(C, -2), X), C, M(M(inv(g, X), inv(g, Y)), C)};
    case Family::C:
      return {M(P(C, 3), X), M(P(C, 2), Y), C};
    case Family::D:
      return {M(M(P(C, 3), Y), inv(g, X)), M(P(C, 2), X), C};
    case Family::E:
      return {C, M(P(C, -2), X), M(inv(g, X), C)};
    case Family::F:
    default:
      return {C, M(M(P(C, -2), Y), inv(g, X)), M(M(X, inv(g, Y)), C)};
  }
}

bool smooth_on(const GroupSpec& g, const TriangularSignature& sig) {
  auto th = theta_of(g);
  return order(g, th[0]) == sig.k() && order(g, th[1]) == sig.l() &&
         order(g, th[2]) == sig.m();
}

}  // namespace

const std::vector<ActionCase>& action_cases() {
  static const std::vector<ActionCase> cases = {
      {"4.2", ActionType::t244, bits244(0, 0, 1)},
      {"4.3", ActionType::t244, bits244(1, 0, 0)},
      {"4.4", ActionType::t244, bits244(0, 1, 0)},
      {"4.5", ActionType::t244, bits244(1, 1, 0)},
      {"4.6", ActionType::t244, bits244(1, 0, 1)},
      {"6.2", ActionType::t236, bits236(0, 1, 0)},
      {"6.3", ActionType::t236, bits236(0, 0, 1)},
      {"6.4", ActionType::t236, bits236(0, 1, 1)},
      {"6.5", ActionType::t236, bits236(1, 0, 0)},
      {"6.6", ActionType::t236, bits236(1, 1, 0)},
      {"6.7", ActionType::t236, bits236(1, 0, 1)},
      {"6.8", ActionType::t236, bits236(1, 1, 1)},
      {"3.2", ActionType::t333, bits333(0, 1, 0)},
      {"3.3", ActionType::t333, bits333(1, 0, 1)},
      {"3.4", ActionType::t333, bits333(1, 1, 1)},
  };
  return cases;
}

const ActionCase* find_case(const std::string& label) {
  for (const auto& c : action_cases())
    if (c.label == label) return &c;
  return nullptr;
}

TriangularSignature signature_of(const ActionCase& c) {
  const int al = c.params.alpha, be = c.params.beta, ga = c.params.gamma, mu = c.params.mu;
  switch (c.type) {
    case ActionType::t244:
      return {2 * (std::abs(al - mu) % 2 + 1), 4 * (mu % 2 + 1),
              4 * (std::abs(ga - mu) % 2 + 1)};
    case ActionType::t236:
      return {2 * (al % 2 + 1), 3 * (be % 2 + 1), 6 * (mu % 2 + 1)};
    case ActionType::t333:
    default:
      return {3 * (mu % 2 + 1), 3 * (be % 2 + 1), 3 * (std::abs(ga - be - mu) % 2 + 1)};
  }
}

bool case_is_full(const ActionCase& c) { return is_full_signature(signature_of(c)); }

std::array<Family, 2> case_families(ActionType t) {
  switch (t) {
    case ActionType::t244: return {Family::A, Family::B};
    case ActionType::t236: return {Family::C, Family::D};
    case ActionType::t333:
    default: return {Family::E, Family::F};
  }
}

std::vector<Variant> admissible_variants(const ActionCase& c, Family f, long n) {
  if (n < 1) return {};
  auto fams = case_families(c.type);
  if (f != fams[0] && f != fams[1]) return {};
  if (f == Family::B && n % 2) return {};
  if ((f == Family::D || f == Family::F) && n % 3) return {};
  const Cells& cells = cell_table().at(c.label);
  int col = column_of(c.type, n);
  return f == fams[0] ? cells.one[col] : cells.two[col];
}

std::vector<Variant> computed_variants(const ActionCase& c, Family f, long n) {
  auto fams = case_families(c.type);
  if (f != fams[0] && f != fams[1]) return {};
  std::vector<Variant> space;
  if (f == fams[0])
    space = {V0, V1};
  else
    space = {W00, W01, W10, W11};
  auto sig = signature_of(c);
  std::vector<Variant> out;
  for (const auto& v : space) {
    try {
      GroupSpec g(f, n, c.params, v);
      if (relators_hold(g) && smooth_on(g, sig)) out.push_back(v);
    } catch (const error&) {
      // family rejects this n
    }
  }
  return out;
}

TriangularAction make_action(const ActionCase& c, Family f, const Variant& v, long n,
                             bool allow_uncataloged) {
  auto fams = case_families(c.type);
  if (f != fams[0] && f != fams[1])
    fail(errc::bad_parameter, "family " + std::string(1, family_letter(f)) +
                                  " does not present case " + c.label);
  GroupSpec g(f, n, c.params, v);
  if (!allow_uncataloged) {
    auto adm = admissible_variants(c, f, n);
    if (std::find(adm.begin(), adm.end(), v) == adm.end())
      fail(errc::not_found, "case " + c.label + ", family " +
                                std::string(1, family_letter(f)) + ", variant " +
                                variant_label(f, v) + " is not admissible at n = " +
                                std::to_string(n));
  }
  return {&c, std::move(g)};
}

TriangularAction make_action(const std::string& case_label, Family f, const Variant& v,
                             long n, bool allow_uncataloged) {
  const ActionCase* c = find_case(case_label);
  if (!c) fail(errc::not_found, "unknown case label " + case_label);
  return make_action(*c, f, v, n, allow_uncataloged);
}

std::array<Element, 3> theta_images(const TriangularAction& a) { return theta_of(a.spec); }

bool is_smooth(const TriangularAction& a) {
  return smooth_on(a.spec, signature_of(*a.kase));
}

bool inversion_automorphism_exists(const TriangularAction& a) {
  auto th = theta_images(a);
  const auto& g = a.spec;
  auto h = hom_from_images(g, {th[0], th[1]}, g, {inv(g, th[0]), inv(g, th[1])});
  return h && h->total() && h->injective() && h->surjective();
}

bool swap_automorphism_exists(const TriangularAction& a, int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 2 || j > 2)
    fail(errc::bad_parameter, "swap needs two distinct slots in 0..2");
  auto th = theta_images(a);
  const auto& g = a.spec;
  auto h = hom_from_images(g, {th[i], th[j]}, g, {inv(g, th[j]), inv(g, th[i])});
  return h && h->total() && h->injective() && h->surjective();
}

bool is_symmetric(const TriangularAction& a) {
  return inversion_automorphism_exists(a) || swap_automorphism_exists(a, 0, 1);
}

long genus_of(const TriangularAction& a) {
  return genus_of_kernel(signature_of(*a.kase), a.spec.order());
}

}  // namespace eh
