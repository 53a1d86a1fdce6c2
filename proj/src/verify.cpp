#include "eh/verify.hpp"

#include <algorithm>
#include <sstream>

#include "eh/catalog.hpp"
#include "eh/locus.hpp"
#include "eh/ovals.hpp"

namespace eh {

long long TableReport::passed() const {
  long long k = 0;
  for (const auto& c : checks) k += c.pass;
  return k;
}

long long TableReport::failed() const {
  return static_cast<long long>(checks.size()) - passed();
}

namespace {

void add(TableReport& rep, std::string name, bool pass, std::string expected,
         std::string computed) {
  rep.checks.push_back({std::move(name), pass, std::move(expected), std::move(computed)});
}

long family_step(Family f) {
  if (f == Family::B) return 2;
  if (f == Family::D || f == Family::F) return 3;
  return 1;
}

std::string variant_list(Family f, const std::vector<Variant>& vs) {
  std::string s;
  for (const auto& v : vs) {
    if (!s.empty()) s += ",";
    s += variant_label(f, v);
  }
  return s.empty() ? "-" : s;
}

std::string row_name(const std::string& cs, Family f, const Variant& v, long n) {
  return cs + " " + family_letter(f) + "_" + variant_label(f, v) + "^" + std::to_string(n);
}

// table 2: reduced quotient structure (Z_d + Z_e) split by the twist

TableReport table2(int) {
  TableReport rep{2, {}};
  struct Shape {
    Family f;
    int num, den;  // smaller factor = num*n/den
    int twist;
  };
  const Shape shapes[] = {
      {Family::A, 1, 1, 4}, {Family::B, 1, 2, 4}, {Family::C, 1, 1, 6},
      {Family::D, 1, 3, 6}, {Family::E, 1, 1, 3}, {Family::F, 1, 3, 3},
  };
  for (const auto& sh : shapes) {
    for (long n = family_step(sh.f); n <= 8; n += family_step(sh.f)) {
      GroupSpec spec(sh.f, n, {}, {});
      ReducedQuotient rq = reduced_quotient(spec);
      long long small = sh.num * n / sh.den;
      std::ostringstream want, got;
      want << "(" << small << "," << n << ") twist " << sh.twist;
      got << "(" << rq.factors[0] << "," << rq.factors[1] << ") twist " << rq.twist;
      add(rep, std::string(1, family_letter(sh.f)) + " n=" + std::to_string(n),
          want.str() == got.str(), want.str(), got.str());
    }
  }
  return rep;
}

// tables 3-5: catalog cells plus instantiated runs per type

TableReport catalog_table(int id, ActionType type) {
  TableReport rep{id, {}};
  for (const auto& c : action_cases()) {
    if (c.type != type) continue;
    for (Family f : case_families(type)) {
      // the frozen congruence cells against the mechanical sweep
      bool cells_ok = true;
      std::string want = "tabulated cells for n = 1..24";
      std::string got = want;
      for (long n = 1; n <= 24; ++n) {
        auto frozen = admissible_variants(c, f, n);
        auto swept = computed_variants(c, f, n);
        if (frozen != swept) {
          cells_ok = false;
          want = "n=" + std::to_string(n) + ": " + variant_list(f, frozen);
          got = "n=" + std::to_string(n) + ": " + variant_list(f, swept);
          break;
        }
      }
      add(rep, c.label + " " + family_letter(f) + " cells", cells_ok, want, got);

      // each variant at its two smallest levels of genus > 5
      std::vector<Variant> vs_all;
      for (long n = family_step(f); n <= 96; n += family_step(f))
        for (const Variant& v : admissible_variants(c, f, n))
          if (std::find(vs_all.begin(), vs_all.end(), v) == vs_all.end()) vs_all.push_back(v);
      for (const Variant& v : vs_all) {
        int found = 0;
        for (long n = family_step(f); n <= 96 && found < 2; n += family_step(f)) {
          auto cell = admissible_variants(c, f, n);
          if (std::find(cell.begin(), cell.end(), v) == cell.end()) continue;
          TriangularAction act = make_action(c.label, f, v, n);
          if (genus_of(act) <= 5) continue;
          ++found;
          std::string fails;
          if (!relators_hold(act.spec)) fails += " relators";
          if (!is_smooth(act)) fails += " smooth";
          if (!is_symmetric(act)) fails += " symmetric";
          add(rep, row_name(c.label, f, v, n) + " g=" + std::to_string(genus_of(act)),
              fails.empty(), "smooth symmetric relators",
              fails.empty() ? "smooth symmetric relators" : "failed:" + fails);
        }
      }
    }
  }
  return rep;
}

// table 6: extension rows

TableReport table6(int max_a) {
  TableReport rep{6, {}};
  for (const auto& row : extension_rows()) {
    if (!row.printed) continue;
    const ActionCase* src = find_case(row.src_case);
    const ActionCase* dst = find_case(row.dst_case);
    std::string name = row.src_case + " " + family_letter(row.src_family) + "^" +
                       std::to_string(row.src_mult) + "a -> " + row.dst_case + " " +
                       family_letter(row.dst_family) + "^" + std::to_string(row.dst_mult) + "a";
    bool ok = true;
    std::string got = "index " + std::to_string(row.index) + ", extends to full, order ratio " +
                      std::to_string(row.index);
    const std::string want = got;

    Rational idx = rh_index(signature_of(*src), signature_of(*dst));
    if (idx != Rational(row.index)) {
      ok = false;
      got = "area index " + idx.str();
    }
    if (ok) {
      // the 6.4 D source needs 3 | a with matching parity, so the
      // instantiation bound stays at 12 regardless of max_a
      const long bound = std::max<long>(12, max_a);
      bool instantiated = false;
      for (long a = 1; a <= bound && !instantiated; ++a) {
        if (row.k * a * a + 1 <= 5) continue;  // below the exceptional range
        long n_src = row.src_mult * a, n_dst = row.dst_mult * a;
        for (const Variant& sv : admissible_variants(*src, row.src_family, n_src)) {
          if (std::find(row.src_variants.begin(), row.src_variants.end(), sv) ==
              row.src_variants.end())
            continue;
          auto dvs = admissible_variants(*dst, row.dst_family, n_dst);
          if (dvs.empty()) continue;
          TriangularAction s = make_action(row.src_case, row.src_family, sv, n_src);
          TriangularAction d = make_action(row.dst_case, row.dst_family, dvs[0], n_dst);
          instantiated = true;
          if (d.spec.order() != row.index * s.spec.order()) {
            ok = false;
            got = "order ratio " + std::to_string(d.spec.order() / s.spec.order());
            break;
          }
          // a target may extend further; resolve the lattice until a full
          // case is reached
          bool tfull = case_is_full(*dst);
          if (!tfull) {
            CatalogedAction dca{row.dst_case, row.dst_family, dvs[0], n_dst, false};
            auto chain = extension_chain(dca, row.k * a * a + 1);
            tfull = !chain.empty() && case_is_full(*find_case(chain.back().case_label));
          }
          if (!tfull) {
            ok = false;
            got = "target chain does not reach a full case";
          }
          break;
        }
      }
      if (!instantiated) {
        ok = false;
        got = "no instantiation with a <= " + std::to_string(bound);
      }
    }
    add(rep, name, ok, want, got);
  }
  return rep;
}

// table 7: oval counts of the symmetry classes at the smallest runs

struct OvalRow {
  const char* cs;
  Family f;
  Variant v;
  long n;
  long genus;
  std::vector<long long> ovals;  // descending
};

const std::vector<OvalRow>& oval_rows() {
  static const std::vector<OvalRow> rows = {
      {"4.4", Family::B, {0, 0}, 8, 17, {4, 4, 2}},
      {"4.4", Family::B, {0, 1}, 8, 17, {4, 4, 2}},
      {"4.4", Family::A, {0, 0}, 4, 9, {4, 4, 2}},
      {"4.4", Family::A, {1, 0}, 4, 9, {4, 2, 1}},
      {"6.2", Family::C, {0, 0}, 4, 17, {4, 4, 2}},
      {"6.2", Family::C, {1, 0}, 3, 10, {3, 3, 1}},
      {"6.8", Family::D, {0, 0}, 6, 37, {6, 4}},
      {"6.8", Family::D, {0, 1}, 3, 10, {3, 2}},
      {"6.8", Family::C, {0, 0}, 2, 13, {4, 2}},
      {"6.3", Family::C, {0, 0}, 4, 9, {2, 2}},
      {"6.3", Family::C, {1, 0}, 6, 19, {3, 3}},
      {"6.3", Family::D, {0, 0}, 12, 25, {6, 2}},
      {"6.3", Family::D, {1, 1}, 6, 7, {3, 1}},
      {"6.5", Family::D, {0, 0}, 12, 73, {6, 2}},
      {"6.5", Family::D, {1, 1}, 6, 19, {3, 1}},
      {"6.5", Family::C, {1, 0}, 2, 7, {1, 1}},
      {"4.5", Family::B, {0, 0}, 4, 13, {4, 2, 2}},
      {"4.5", Family::B, {0, 1}, 4, 13, {4, 2, 2}},
      {"4.5", Family::A, {0, 0}, 2, 7, {4, 2, 1}},
      {"4.5", Family::A, {1, 0}, 2, 7, {4, 2, 1}},
      {"6.2", Family::D, {0, 0}, 6, 13, {2, 2, 2}},
      {"6.2", Family::D, {1, 0}, 9, 28, {3, 3, 1}},
      {"6.6", Family::C, {1, 0}, 2, 11, {3, 1}},
      {"6.6", Family::D, {0, 0}, 12, 121, {6, 6}},
      {"6.6", Family::D, {1, 1}, 6, 31, {3, 3}},
  };
  return rows;
}

std::string oval_str(const std::vector<long long>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

TableReport table7(int max_a) {
  TableReport rep{7, {}};
  for (const auto& r : oval_rows()) {
    if (genus_decomposition(r.genus).a > max_a) continue;
    TriangularAction act = make_action(r.cs, r.f, r.v, r.n);
    OvalReport orep = count_ovals(act);
    std::vector<long long> got;
    for (const auto& cls : orep.classes)
      if (cls.has_fixed_points) got.push_back(cls.ovals);
    std::sort(got.rbegin(), got.rend());
    bool ok = got == r.ovals && orep.genus == r.genus;
    for (long long k : got)
      if (k < 1 || k > r.genus + 1) ok = false;
    add(rep, row_name(r.cs, r.f, r.v, r.n) + " g=" + std::to_string(r.genus), ok,
        oval_str(r.ovals), oval_str(got));
  }
  return rep;
}

// table 8: the tau action on each cataloged group

TableReport table8(int) {
  TableReport rep{8, {}};
  for (const auto& c : action_cases()) {
    if (c.type == ActionType::t333) continue;  // no tau for E,F
    for (Family f : case_families(c.type)) {
      std::vector<long> levels;
      for (long n = family_step(f); n <= 96 && levels.size() < 2; n += family_step(f)) {
        if (admissible_variants(c, f, n).empty()) continue;
        TriangularAction probe = make_action(c.label, f, admissible_variants(c, f, n)[0], n);
        if (genus_of(probe) > 5) levels.push_back(n);
      }
      for (long n : levels) {
        for (const Variant& v : admissible_variants(c, f, n)) {
          TriangularAction act = make_action(c.label, f, v, n);
          std::string fails;
          GroupSpec ext = tau_extension(act);
          if (!relators_hold(ext)) fails += " relators";
          std::array<Element, 3> refl{};
          try {
            refl = boundary_reflections(ext, act);
          } catch (const error&) {
            fails += " reflections";
          }
          if (fails.empty()) {
            auto part = reflection_conjugacy(signature_of(c));
            for (int i = 0; i < 3; ++i)
              for (int j = i + 1; j < 3; ++j)
                if (part[i] == part[j] && !are_conjugate(ext, refl[i], refl[j]))
                  fails += " fusion";
            if (c.type == ActionType::t244 &&
                merged_classes_odd_n(ext, act) != (n % 2 == 1))
              fails += " odd-merge";
          }
          add(rep, row_name(c.label, f, v, n) + "+tau", fails.empty(),
              "relators reflections fusion",
              fails.empty() ? "relators reflections fusion" : "failed:" + fails);
        }
      }
    }
  }
  return rep;
}

}  // namespace

TableReport verify_table(int table, int max_a) {
  if (max_a < 1) fail(errc::bad_parameter, "max_a must be >= 1");
  switch (table) {
    case 2: return table2(max_a);
    case 3: return catalog_table(3, ActionType::t244);
    case 4: return catalog_table(4, ActionType::t236);
    case 5: return catalog_table(5, ActionType::t333);
    case 6: return table6(max_a);
    case 7: return table7(max_a);
    case 8: return table8(max_a);
    default:
      fail(errc::bad_parameter, "no verification suite for table " + std::to_string(table));
  }
}

std::vector<TableReport> verify_tables(const std::vector<int>& ids, int max_a) {
  std::vector<int> want = ids;
  if (want.empty()) want = {2, 3, 4, 5, 6, 7, 8};
  std::vector<TableReport> out;
  for (int id : want) out.push_back(verify_table(id, max_a));
  return out;
}

bool all_passed(const std::vector<TableReport>& reports) {
  for (const auto& r : reports)
    if (r.failed() > 0) return false;
  return true;
}

}  // namespace eh
