#include "eh/locus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace eh {
namespace {

const Variant V0{0, 0}, V1{1, 0};
const Variant W00{0, 0}, W01{0, 1}, W10{1, 0}, W11{1, 1};

bool two_bit(Family f) { return f == Family::B || f == Family::D || f == Family::F; }

struct StatementList {
  std::vector<StatementEntry> v;
  StatementList& e(const char* cs, Family f, Variant var, int mult, bool bold,
                   bool div3 = false) {
    v.push_back({cs, f, var, mult, bold, div3});
    return *this;
  }
};

std::vector<StatementEntry> build_statement(int k, bool a_even) {
  StatementList s;
  switch (k) {
    case 1:
      if (a_even) {
        s.e("4.2", Family::B, W00, 1, false).e("4.2", Family::B, W01, 1, false);
        s.e("4.3", Family::A, V0, 1, false).e("4.3", Family::A, V1, 1, false);
        s.e("4.4", Family::B, W00, 2, true).e("4.4", Family::B, W01, 2, true);
        s.e("4.6", Family::A, V0, 1, false).e("4.6", Family::A, V1, 1, false);
        s.e("6.2", Family::C, V0, 1, true);
        s.e("3.3", Family::E, V0, 1, false);
        s.e("6.8", Family::D, W00, 1, true, true);
      } else {
        s.e("6.2", Family::C, V1, 1, true);
        s.e("3.3", Family::E, V0, 1, false);
        s.e("6.8", Family::D, W01, 1, true, true);
      }
      break;
    case 2:
      if (a_even) {
        s.e("4.2", Family::A, V0, 1, false).e("4.2", Family::A, V1, 1, false);
        s.e("4.3", Family::B, W00, 2, false).e("4.3", Family::B, W01, 2, false);
        s.e("4.4", Family::A, V0, 2, true).e("4.4", Family::A, V1, 2, true);
        s.e("4.6", Family::B, W00, 2, false).e("4.6", Family::B, W01, 2, false);
        s.e("6.3", Family::C, V0, 2, true);
        s.e("6.7", Family::C, V0, 1, false);
        s.e("3.2", Family::E, V0, 2, false);
        s.e("6.4", Family::D, W00, 2, false, true);
        s.e("6.5", Family::D, W00, 2, true, true);
        s.e("3.4", Family::F, W00, 2, false, true);
      } else {
        s.e("4.2", Family::A, V0, 1, false).e("4.2", Family::A, V1, 1, false);
        s.e("4.3", Family::B, W11, 2, false).e("4.3", Family::B, W10, 2, false);
        s.e("4.4", Family::A, V0, 2, true).e("4.4", Family::A, V1, 2, true);
        s.e("4.6", Family::B, W10, 2, false).e("4.6", Family::B, W11, 2, false);
        s.e("6.7", Family::C, V1, 1, false);
        s.e("6.3", Family::C, V1, 2, true);
        s.e("3.2", Family::E, V1, 2, false);
        s.e("6.4", Family::D, W11, 2, false, true);
        s.e("6.5", Family::D, W11, 2, true, true);
        s.e("3.4", Family::F, W11, 2, false, true);
      }
      break;
    case 3:
      if (a_even) {
        s.e("4.5", Family::B, W00, 2, true).e("4.5", Family::B, W01, 2, true);
        s.e("6.8", Family::C, V0, 1, true);
        s.e("6.2", Family::D, W00, 3, true);
        s.e("3.3", Family::F, W00, 3, false);
      } else {
        s.e("6.8", Family::C, V0, 1, true);
        s.e("6.2", Family::D, W10, 3, true);
        s.e("3.3", Family::F, W01, 3, false);
      }
      break;
    case 6:
      if (a_even) {
        s.e("4.5", Family::A, V0, 2, true).e("4.5", Family::A, V1, 2, true);
        s.e("6.3", Family::D, W00, 6, true);
        s.e("6.4", Family::C, V0, 2, false);
        s.e("6.5", Family::C, V0, 2, true);
        s.e("6.7", Family::D, W00, 3, false);
        s.e("3.2", Family::F, W00, 6, false);
        s.e("3.4", Family::E, V0, 2, false);
      } else {
        s.e("4.5", Family::A, V0, 2, true).e("4.5", Family::A, V1, 2, true);
        s.e("6.3", Family::D, W11, 6, true);
        s.e("6.4", Family::C, V1, 2, false);
        s.e("6.5", Family::C, V1, 2, true);
        s.e("6.7", Family::D, W11, 3, false);
        s.e("3.2", Family::F, W11, 6, false);
        s.e("3.4", Family::E, V1, 2, false);
      }
      break;
    case 10:
      s.e("6.6", Family::C, a_even ? V0 : V1, 2, true);
      break;
    case 30:
      s.e("6.6", Family::D, a_even ? W00 : W11, 6, true);
      break;
    default:
      break;
  }
  return s.v;
}

Variant resolve_dst_variant(const ExtensionRow& row, const CatalogedAction& src,
                            long n_dst) {
  const ActionCase* dst = find_case(row.dst_case);
  auto adm = admissible_variants(*dst, row.dst_family, n_dst);
  if (adm.size() == 1) return adm[0];
  // the admissible cell is ambiguous; first try the tabulated pairing
  auto in_cell = [&](const Variant& v) {
    return std::find(adm.begin(), adm.end(), v) != adm.end();
  };
  for (size_t i = 0; i < row.src_variants.size(); ++i)
    if (row.src_variants[i] == src.variant && i < row.dst_variants.size() &&
        in_cell(row.dst_variants[i]))
      return row.dst_variants[i];
  // A_delta pairs with B_{eps delta}: the shared bit survives, the extra
  // wrap bit of the two-parameter side is fixed by admissibility
  bool s2 = two_bit(row.src_family), d2 = two_bit(row.dst_family);
  std::vector<Variant> fit;
  for (const auto& cand : adm) {
    long long shared = d2 ? cand.eps2 : cand.eps;
    if (shared == (s2 ? src.variant.eps2 : src.variant.eps)) fit.push_back(cand);
  }
  if (fit.size() == 1) return fit[0];
  fail(errc::spec_mismatch, "ambiguous extension variant for " + row.dst_case +
                                " at n = " + std::to_string(n_dst));
}

}  // namespace

GenusDecomposition genus_decomposition(long g) {
  if (g <= 5) fail(errc::genus_too_small, "genus must exceed 5, got " + std::to_string(g));
  long long m = g - 1;
  GenusDecomposition d;
  for (auto [p, e] : factorize(m)) {
    for (int i = 0; i + 1 < e; i += 2) d.a *= p;
    if (e % 2) d.k *= p;
  }
  return d;
}

bool action_less(const CatalogedAction& x, const CatalogedAction& y) {
  auto key = [](const CatalogedAction& c) {
    return std::make_tuple(c.case_label, family_letter(c.family), c.variant.eps,
                           c.variant.eps2, c.n);
  };
  return key(x) < key(y);
}

const std::vector<StatementEntry>& statement_entries(int k, bool a_even) {
  static const auto* table = [] {
    auto* t = new std::map<std::pair<int, bool>, std::vector<StatementEntry>>;
    for (int k2 : {1, 2, 3, 6, 10, 30})
      for (bool even : {false, true}) (*t)[{k2, even}] = build_statement(k2, even);
    return t;
  }();
  static const std::vector<StatementEntry> empty;
  auto it = table->find({k, a_even});
  return it == table->end() ? empty : it->second;
}

std::vector<CatalogedAction> symmetric_actions(long g, Validation v) {
  auto dec = genus_decomposition(g);
  std::vector<CatalogedAction> out;
  static const std::set<long long> ks{1, 2, 3, 6, 10, 30};
  if (!ks.count(dec.k)) return out;
  for (const auto& s : statement_entries(static_cast<int>(dec.k), dec.a % 2 == 0)) {
    if (s.needs_3div && dec.a % 3 != 0) continue;
    out.push_back({s.case_label, s.family, s.variant, static_cast<long>(s.mult * dec.a),
                   s.bold});
  }
  std::sort(out.begin(), out.end(), action_less);
  if (v == Validation::full) {
    for (const auto& a : out) {
      auto act = make_action(a.case_label, a.family, a.variant, a.n);
      if (!relators_hold(act.spec))
        fail(errc::spec_mismatch, "relators fail for " + a.case_label);
      if (!is_smooth(act)) fail(errc::spec_mismatch, "action not smooth at " + a.case_label);
      if (!is_symmetric(act))
        fail(errc::spec_mismatch, "action not symmetric at " + a.case_label);
      if (genus_of(act) != g)
        fail(errc::spec_mismatch, "genus mismatch at " + a.case_label);
      if (case_is_full(*act.kase) != a.full)
        fail(errc::spec_mismatch, "fullness mismatch at " + a.case_label);
    }
  }
  return out;
}

int symmetric_full_count(long g) {
  int full = 0;
  for (const auto& a : symmetric_actions(g)) full += a.full ? 1 : 0;
  return full;
}

const std::vector<ExtensionRow>& extension_rows() {
  static const std::vector<ExtensionRow> rows = [] {
    std::vector<ExtensionRow> r;
    auto add = [&](int k, const char* sc, Family sf, std::vector<Variant> sv, int sm,
                   const char* dc, Family df, std::vector<Variant> dv, int dm, long idx,
                   bool printed = true) {
      r.push_back({k, sc, sf, std::move(sv), sm, dc, df, std::move(dv), dm, idx, printed});
    };
    add(1, "4.2", Family::B, {W00, W01}, 1, "4.6", Family::A, {V0, V1}, 1, 2);
    add(2, "4.2", Family::A, {V0, V1}, 1, "4.4", Family::A, {V0, V1}, 2, 4);
    add(2, "4.2", Family::A, {V0, V1}, 1, "4.6", Family::B, {W00, W01}, 2, 2);
    add(1, "4.3", Family::A, {V0, V1}, 1, "4.4", Family::B, {W00, W01}, 2, 2);
    add(2, "4.3", Family::B, {W00, W01}, 2, "4.4", Family::A, {V0, V1}, 2, 2);
    add(1, "4.6", Family::A, {V0, V1}, 1, "4.4", Family::B, {W00, W01}, 2, 2);
    add(2, "4.6", Family::B, {W00, W01}, 2, "4.4", Family::A, {V0, V1}, 2, 2);
    add(2, "6.4", Family::D, {W00}, 2, "6.3", Family::C, {V0}, 2, 3);
    add(6, "6.4", Family::C, {V0}, 2, "6.3", Family::D, {W00}, 6, 3);
    add(6, "6.7", Family::D, {W00}, 3, "6.3", Family::D, {W00}, 6, 4);
    add(2, "6.7", Family::C, {V0}, 1, "6.3", Family::C, {V0}, 2, 4);
    add(2, "3.2", Family::E, {V0}, 2, "6.3", Family::C, {V0}, 2, 2);
    add(6, "3.2", Family::F, {W00}, 6, "6.3", Family::D, {W00}, 6, 2);
    add(3, "3.3", Family::F, {W00}, 3, "6.2", Family::D, {W00}, 3, 2);
    add(1, "3.3", Family::E, {V0}, 1, "6.2", Family::C, {V0}, 1, 2);
    add(2, "3.4", Family::F, {W00}, 2, "3.2", Family::E, {V0}, 2, 3);
    // reconstructed: the (3,3,3) side of 3.4 extends through the unique
    // degree-2 inclusion into the (2,6,12) type
    add(6, "3.4", Family::E, {V0}, 2, "6.4", Family::C, {V0}, 2, 2, false);
    return r;
  }();
  return rows;
}

std::optional<ExtensionTarget> extension_of(const CatalogedAction& a, long g) {
  const ActionCase* c = find_case(a.case_label);
  if (!c) fail(errc::not_found, "unknown case label " + a.case_label);
  if (case_is_full(*c)) return std::nullopt;
  auto dec = genus_decomposition(g);
  const ExtensionRow* best = nullptr;
  for (const auto& row : extension_rows()) {
    if (row.k != dec.k || row.src_case != a.case_label || row.src_family != a.family)
      continue;
    if (static_cast<long>(row.src_mult * dec.a) != a.n) continue;
    if (!best || row.index < best->index) best = &row;
  }
  if (!best)
    fail(errc::not_found, "no extension row matches " + a.case_label + " at genus " +
                              std::to_string(g));
  long n_dst = static_cast<long>(best->dst_mult * dec.a);
  Variant dv = resolve_dst_variant(*best, a, n_dst);
  return ExtensionTarget{best->dst_case, best->dst_family, dv, n_dst, best->index};
}

std::vector<ExtensionTarget> extension_chain(const CatalogedAction& a, long g) {
  std::vector<ExtensionTarget> chain;
  CatalogedAction cur = a;
  for (int step = 0; step < 5; ++step) {
    auto ext = extension_of(cur, g);
    if (!ext) return chain;
    chain.push_back(*ext);
    const ActionCase* c = find_case(ext->case_label);
    cur = {ext->case_label, ext->family, ext->variant, ext->n, case_is_full(*c)};
    if (cur.full) return chain;
  }
  fail(errc::spec_mismatch, "extension chain from " + a.case_label + " does not close");
}

std::vector<ReducedTypeCensus> exceptional_census(long g) {
  if (g <= 5) fail(errc::genus_too_small, "genus must exceed 5, got " + std::to_string(g));
  std::vector<ReducedTypeCensus> out;
  for (const auto& cand : triangle_candidates()) {
    if (!cand.full) continue;
    ReducedTypeCensus e;
    e.signature = cand.sig;
    int t = twist_order(cand.type);
    Rational nmr = Rational(g - 1) / (Rational(t) * cand.sig.area());
    if (!nmr.is_integer()) {
      out.push_back(std::move(e));
      continue;
    }
    long long M = nmr.as_integer();
    e.nm = M;
    for (long long m = 1; m * m <= M; ++m) {
      if (M % (m * m) != 0) continue;
      if (twist_soluble(t, M / (m * m))) e.pairs.push_back({M / m, m});
    }
    Ring ring = cand.type == ActionType::t244 ? Ring::gauss : Ring::eisenstein;
    long long ram = t == 4 ? 2 : 3;
    long long cnt = 1;
    for (auto [p, mu] : factorize(M)) {
      if (p == ram)
        cnt *= 1;  // the ramified prime always leaves exactly one choice
      else if (is_split(p, ring))
        cnt *= mu / 2 + 1;
      else
        cnt *= (mu % 2 == 0) ? 1 : 0;
    }
    e.count = cnt;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace eh
