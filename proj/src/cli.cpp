#include "eh/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "eh/catalog.hpp"
#include "eh/locus.hpp"
#include "eh/ovals.hpp"
#include "eh/quadint.hpp"
#include "eh/verify.hpp"

namespace eh {

namespace {

using json = nlohmann::ordered_json;

int exit_for(errc c) {
  switch (c) {
    case errc::not_full:
    case errc::family_unsupported:
    case errc::does_not_split:
    case errc::not_applicable:
      return 3;
    default:
      return 2;
  }
}

std::string fam_str(Family f) { return std::string(1, family_letter(f)); }

json element_json(const Element& e) {
  return json{{"r", e.r}, {"s", e.s}, {"t", e.t}, {"p", e.p}, {"q", e.q}};
}

// the variant string length selects the one- or two-bit family of the case
Family family_for_variant(const ActionCase& c, const std::string& vstr) {
  auto fams = case_families(c.type);
  return vstr.size() == 2 ? fams[1] : fams[0];
}

struct Parsed {
  const ActionCase* kase = nullptr;
  Family family = Family::A;
  Variant variant{};
};

Parsed parse_row(const std::string& case_label, const std::string& vstr) {
  const ActionCase* kase = find_case(case_label);
  if (!kase) fail(errc::not_found, "unknown case " + case_label);
  Family f = family_for_variant(*kase, vstr);
  auto v = parse_variant(f, vstr);
  if (!v) fail(errc::bad_parameter, "bad variant '" + vstr + "' for family " +
                                        std::string(1, family_letter(f)));
  return {kase, f, *v};
}

bool is_cataloged(const ActionCase& c, Family f, const Variant& v, long n) {
  auto cell = admissible_variants(c, f, n);
  return std::find(cell.begin(), cell.end(), v) != cell.end();
}

json census_record(long g) {
  GenusDecomposition dec = genus_decomposition(g);
  json rec;
  rec["genus"] = g;
  rec["k"] = dec.k;
  rec["a"] = dec.a;
  json acts = json::array();
  for (const auto& a : symmetric_actions(g)) {
    json ja;
    ja["case"] = a.case_label;
    ja["family"] = fam_str(a.family);
    ja["variant"] = variant_label(a.family, a.variant);
    ja["n"] = a.n;
    ja["signature"] = signature_of(*find_case(a.case_label)).str();
    ja["full"] = a.full;
    if (auto ext = extension_of(a, g)) {
      ja["extension"] = json{{"case", ext->case_label},
                             {"family", fam_str(ext->family)},
                             {"variant", variant_label(ext->family, ext->variant)},
                             {"n", ext->n},
                             {"index", ext->index}};
    } else {
      ja["extension"] = nullptr;
    }
    acts.push_back(std::move(ja));
  }
  rec["actions"] = std::move(acts);
  rec["full_count"] = symmetric_full_count(g);
  json cen = json::array();
  for (const auto& t : exceptional_census(g))
    if (t.count > 0)
      cen.push_back(json{{"signature", t.signature.str()}, {"nm", t.nm}, {"count", t.count}});
  rec["census"] = std::move(cen);
  return rec;
}

void census_table_line(std::ostream& os, const json& rec) {
  os << "genus " << rec["genus"].get<long>() << ": k=" << rec["k"].get<long long>()
     << " a=" << rec["a"].get<long long>() << ", " << rec["actions"].size() << " actions, "
     << rec["full_count"].get<int>() << " full\n";
  for (const auto& a : rec["actions"]) {
    os << "  " << a["case"].get<std::string>() << " " << a["family"].get<std::string>() << "_"
       << a["variant"].get<std::string>() << "^" << a["n"].get<long>() << " "
       << a["signature"].get<std::string>();
    if (a["full"].get<bool>()) {
      os << " full";
    } else {
      const auto& e = a["extension"];
      os << " -> " << e["case"].get<std::string>() << " " << e["family"].get<std::string>()
         << "_" << e["variant"].get<std::string>() << "^" << e["n"].get<long>() << " (index "
         << e["index"].get<long>() << ")";
    }
    os << "\n";
  }
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  CLI::App app{"elliptic-hyperelliptic locus toolkit"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_file;
  auto add_common = [&](CLI::App* sc) {
    sc->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    sc->add_option("--out", out_file, "write the report to a file");
  };

  long genus = 0, from = 0, to = 0;
  auto* c_census = app.add_subcommand("census", "symmetric actions and type census per genus");
  c_census->add_option("--genus", genus, "single genus, > 5");
  c_census->add_option("--from", from, "range start");
  c_census->add_option("--to", to, "range end");
  add_common(c_census);

  std::string case_label, variant_str;
  long level = 0;
  bool with_tau = false, force = false;
  auto* c_group = app.add_subcommand("group", "inspect one presented group");
  c_group->add_option("--case", case_label, "case label, e.g. 4.4")->required();
  c_group->add_option("--n", level, "level n")->required();
  c_group->add_option("--variant", variant_str, "variant bits, e.g. 0 or 00")->required();
  c_group->add_flag("--tau", with_tau, "extend by the symmetry tau");
  c_group->add_flag("--force", force, "allow uncataloged cells");
  add_common(c_group);

  auto* c_ovals = app.add_subcommand("ovals", "ovals per symmetry class of a full action");
  c_ovals->add_option("--case", case_label, "case label")->required();
  c_ovals->add_option("--n", level, "level n")->required();
  c_ovals->add_option("--variant", variant_str, "variant bits")->required();
  add_common(c_ovals);

  std::string ring_name_str;
  long long factor_p = 0;
  auto* c_rings = app.add_subcommand("rings", "prime splitting and quotient invariants");
  c_rings->add_option("--ring", ring_name_str, "gauss or eisenstein")
      ->required()
      ->check(CLI::IsMember({"gauss", "eisenstein"}));
  c_rings->add_option("--factor", factor_p, "rational prime to factor")->required();
  add_common(c_rings);

  std::vector<int> tables;
  int max_a = 4;
  auto* c_verify = app.add_subcommand("verify", "re-derive the reference tables");
  c_verify->add_option("--tables", tables, "suite ids in 2..8; default all");
  c_verify->add_option("--max-a", max_a, "instantiation bound");
  add_common(c_verify);

  try {
    std::vector<const char*> argv;
    argv.push_back("ehlocus");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::CallForAllHelp&) {
    res.out = app.help("", CLI::AppFormatMode::All);
    return res;
  } catch (const CLI::ParseError& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.code = 2;
    return res;
  }

  std::string payload;
  try {
    if (*c_census) {
      const bool single = c_census->count("--genus") > 0;
      const bool range = c_census->count("--from") > 0 || c_census->count("--to") > 0;
      if (single == range)
        fail(errc::bad_parameter, "give either --genus or both --from and --to");
      if (range && (c_census->count("--from") == 0 || c_census->count("--to") == 0 || from > to))
        fail(errc::bad_parameter, "need --from <= --to");
      std::vector<long> gs;
      if (single) gs.push_back(genus);
      else
        for (long g = from; g <= to; ++g) gs.push_back(g);
      if (format == "json") {
        if (single) {
          payload = census_record(gs[0]).dump(2) + "\n";
        } else {
          json arr = json::array();
          for (long g : gs) arr.push_back(census_record(g));
          payload = arr.dump(2) + "\n";
        }
      } else {
        std::ostringstream os;
        for (long g : gs) {
          json rec = census_record(g);
          if (!single && rec["actions"].empty()) continue;
          census_table_line(os, rec);
        }
        payload = os.str();
      }
    } else if (*c_group) {
      Parsed row = parse_row(case_label, variant_str);
      TriangularAction act = make_action(row.kase->label, row.family, row.variant, level, force);
      GroupSpec spec = with_tau ? tau_extension(act) : act.spec;
      bool cataloged = is_cataloged(*row.kase, row.family, row.variant, level);
      ReducedQuotient rq = reduced_quotient(act.spec);
      if (format == "json") {
        json o;
        o["case"] = row.kase->label;
        o["family"] = fam_str(row.family);
        o["variant"] = variant_label(row.family, row.variant);
        o["n"] = level;
        o["tau"] = with_tau;
        o["cataloged"] = cataloged;
        o["order"] = spec.order();
        o["relators"] = relators_hold(spec);
        o["classes"] = conjugacy_class_count(spec);
        o["reduced"] = json{{"factors", {rq.factors[0], rq.factors[1]}}, {"twist", rq.twist}};
        payload = o.dump(2) + "\n";
      } else {
        std::ostringstream os;
        os << row.kase->label << " " << spec.label() << ": order " << spec.order()
           << ", relators " << (relators_hold(spec) ? "ok" : "BROKEN") << ", "
           << conjugacy_class_count(spec) << " classes, reduced (" << rq.factors[0] << ","
           << rq.factors[1] << ") twist " << rq.twist;
        if (!cataloged) os << " [uncataloged]";
        os << "\n";
        payload = os.str();
      }
    } else if (*c_ovals) {
      Parsed row = parse_row(case_label, variant_str);
      TriangularAction act = make_action(row.kase->label, row.family, row.variant, level);
      OvalReport rep = count_ovals(act);
      if (format == "json") {
        json o;
        o["genus"] = rep.genus;
        o["case"] = row.kase->label;
        o["family"] = fam_str(row.family);
        o["n"] = level;
        o["variant"] = variant_label(row.family, row.variant);
        json cls = json::array();
        for (const auto& c : rep.classes)
          cls.push_back(json{{"rep", element_json(c.rep)},
                             {"size", c.size},
                             {"ovals", c.ovals},
                             {"fixed_points", c.has_fixed_points}});
        o["classes"] = std::move(cls);
        payload = o.dump(2) + "\n";
      } else {
        GroupSpec ext = build_full_group(act);
        std::vector<long long> fixed;
        std::ostringstream os;
        os << row.kase->label << " " << act.spec.label() << ": genus " << rep.genus
           << ", full group order " << rep.group_order << "\n";
        for (const auto& c : rep.classes) {
          os << "  class " << to_text(ext, c.rep) << ": size " << c.size << ", ovals "
             << c.ovals << (c.has_fixed_points ? "" : " (no fixed points)") << "\n";
          if (c.has_fixed_points) fixed.push_back(c.ovals);
        }
        std::sort(fixed.rbegin(), fixed.rend());
        os << "ovals: ";
        for (size_t i = 0; i < fixed.size(); ++i) os << (i ? ", " : "") << fixed[i];
        os << "\n";
        payload = os.str();
      }
    } else if (*c_rings) {
      Ring ring = ring_name_str == "gauss" ? Ring::gauss : Ring::eisenstein;
      auto [p1, p2] = split(factor_p, ring);
      AbelianInvariants inv = quotient_invariants(p1);
      if (format == "json") {
        json o;
        o["ring"] = ring_name_str;
        o["p"] = factor_p;
        o["factors"] = json::array({{p1.a, p1.b}, {p2.a, p2.b}});
        o["invariants"] = json::array({inv.d1, inv.d2});
        payload = o.dump(2) + "\n";
      } else {
        std::ostringstream os;
        os << factor_p << " = (" << p1.str() << ")(" << p2.str() << "); R/(" << p1.str()
           << ") = Z_" << inv.d1 << " x Z_" << inv.d2 << "\n";
        payload = os.str();
      }
    } else if (*c_verify) {
      auto reports = verify_tables(tables, max_a);
      bool pass = all_passed(reports);
      if (format == "json") {
        json o;
        o["max_a"] = max_a;
        json ts = json::array();
        for (const auto& r : reports) {
          json jt;
          jt["table"] = r.table;
          jt["checks"] = r.checks.size();
          jt["passed"] = r.passed();
          jt["failed"] = r.failed();
          json diffs = json::array();
          for (const auto& c : r.checks)
            if (!c.pass)
              diffs.push_back(
                  json{{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}});
          jt["diffs"] = std::move(diffs);
          ts.push_back(std::move(jt));
        }
        o["tables"] = std::move(ts);
        o["pass"] = pass;
        payload = o.dump(2) + "\n";
      } else {
        std::ostringstream os;
        for (const auto& r : reports) {
          os << "table " << r.table << ": " << r.checks.size() << " checks, " << r.passed()
             << " passed\n";
          for (const auto& c : r.checks)
            if (!c.pass)
              os << "  FAIL " << c.name << ": expected " << c.expected << ", computed "
                 << c.computed << "\n";
        }
        os << (pass ? "all suites pass" : "verification failed") << "\n";
        payload = os.str();
      }
      if (!pass) res.code = 4;
    }
  } catch (const error& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.code = exit_for(e.code());
    return res;
  }

  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) {
      res.err = "error: cannot write " + out_file + "\n";
      res.code = 2;
      return res;
    }
    f << payload;
  } else {
    res.out = payload;
  }
  return res;
}

}  // namespace eh
