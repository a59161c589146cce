#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "knotconc/cabling.hpp"
#include "knotconc/catalog.hpp"
#include "knotconc/legendrian.hpp"
#include "knotconc/report.hpp"
#include "knotconc/surgery.hpp"

using namespace knotconc;

namespace {

struct Options {
  std::string output = "table";
  std::string catalog;
  std::string knot, knot2, omega, mu0 = "mu_K", mu1 = "mu_Ptilde";
  std::vector<std::string> names;
  std::int64_t p = 0, cable = 0, bound = 211;
  int k_max = 6;
};

Catalog open_catalog(const Options& o) {
  return load_catalog(o.catalog.empty() ? default_catalog_path() : std::filesystem::path(o.catalog));
}

// Cable of K, carrying tau through the cable rule when tau is declared.
KnotProfile cabled(const KnotProfile& K, std::int64_t p) {
  if (p < 2) throw BadFlag("--cable must be at least 2");
  return K.tau ? tau_cable_rule(K, p) : cable_profile(K, p);
}

std::pair<KnotProfile, KnotProfile> knot_pair(const Catalog& cat, const Options& o) {
  const KnotProfile& K0 = cat.knot(o.knot);
  if (o.knot2.empty()) {
    if (o.cable) return {K0, cabled(K0, o.cable)};
    return {K0, cat.knot("unknot")};
  }
  const KnotProfile& K1 = cat.knot(o.knot2);
  return {K0, o.cable ? cabled(K1, o.cable) : K1};
}

Report run(const std::string& cmd, const Options& o) {
  Report out;
  out["command"] = cmd == "legendrian-satellite" ? "legendrian satellite" : cmd;
  const Catalog cat = open_catalog(o);
  if (cmd == "alexander") {
    const KnotProfile& K = cat.knot(o.knot);
    const auto a = K.alexander();
    if (!a) throw MissingAlexander("no Alexander polynomial for '" + K.name + "'");
    out["knot"] = K.name;
    out["alexander"] = format(*a);
    out["source"] = K.seifert ? "computed from the Seifert matrix" : "declared";
    const Factorization f = factor(*a);
    Report fs = Report::array();
    for (const auto& x : f.factors) fs.push_back(Report{{"factor", format(x.poly)}, {"multiplicity", x.multiplicity}});
    out["content"] = (f.sign < 0 ? "-" : "") + f.content.str();
    out["factors"] = fs;
  } else if (cmd == "signature") {
    const KnotProfile& K = cat.knot(o.knot);
    const RootOfUnity w = RootOfUnity::parse(o.omega);
    out["knot"] = K.name;
    out["omega"] = w.str();
    out["signature"] = K.signature(w);
  } else if (cmd == "sigfn") {
    const KnotProfile& K = cat.knot(o.knot);
    out["knot"] = K.name;
    out["signature_function"] = to_json(K.signature_function());
  } else if (cmd == "cable-obstruction") {
    const KnotProfile& K = cat.knot(o.knot);
    out["knot"] = K.name;
    out["cable"] = K.name + "(" + std::to_string(o.p) + ",1)";
    out["result"] = to_json(finite_order_obstruction(K, o.p, o.bound));
  } else if (cmd == "fox-milnor") {
    const auto [K0, K1] = knot_pair(cat, o);
    out["knots"] = Report::array({K0.name, K1.name});
    out["alexander"] = Report::array({format(*K0.alexander()), format(*K1.alexander())});
    out["result"] = to_json(fox_milnor_obstruction(K0, K1, o.k_max));
  } else if (cmd == "verdict") {
    const auto [K0, K1] = knot_pair(cat, o);
    out["knots"] = Report::array({to_json(K0), to_json(K1)});
    out["result"] = to_json(rational_concordance_verdict(K0, K1, SearchOptions{o.k_max, o.bound}));
  } else if (cmd == "legendrian") {
    const FrontDiagram& d = cat.front(o.knot);
    out["front"] = d.name;
    if (const auto* e = cat.find(o.knot); e && e->represents) out["represents"] = *e->represents;
    if (d.periodic) out["winding"] = winding_number(d);
    out["invariants"] = to_json(invariants(d));
  } else if (cmd == "legendrian-satellite") {
    const PatternData P = cat.pattern(o.knot);
    const CatalogEntry& c = cat.entry(o.knot2);
    LegendrianInvariants K;
    if (c.front) {
      K = invariants(*c.front);
    } else if (c.kind == EntryKind::knot && c.profile.legendrian) {
      K.tb = c.profile.legendrian->tb;
      K.rot = c.profile.legendrian->rot;
    } else {
      throw HypothesisNotMet("'" + o.knot2 + "' has no Legendrian representative");
    }
    out["pattern"] = Report{{"name", P.name}, {"winding", P.winding}, {"tb", P.tb}, {"rot", P.rot}};
    out["companion"] = Report{{"name", c.name}, {"tb", K.tb}, {"rot", K.rot}};
    out["satellite"] = to_json(satellite_invariants(P, K));
  } else if (cmd == "theorem31") {
    out["result"] = to_json(theorem31_pipeline(cat.knot(o.knot), cat.pattern(o.knot2)));
  } else if (cmd == "homology-check") {
    if (o.p < 1) throw BadFlag("--p must be positive");
    const SurgeryPresentation s = o.knot.empty() ? winding_cobordism_model(o.p) : cat.presentation(o.knot);
    out["presentation"] = s.name;
    out["linking_matrix"] = format_matrix(s.linking);
    if (!s.note.empty()) out["note"] = s.note;
    out["result"] = to_json(cobordism_meridian_check(s, o.mu0, o.mu1, o.p));
  } else if (cmd == "catalog") {
    Report es = Report::array();
    for (const auto& e : cat.entries()) es.push_back(to_json(e));
    out["entries"] = es;
  }
  return out;
}

int emit_error(const Error& e, const Options& o) {
  const auto* cm = dynamic_cast<const ClassMismatch*>(&e);
  if (o.output == "json") {
    Report j{{"error", Report{{"kind", e.kind()}, {"message", e.what()}}}};
    if (cm) j["error"]["residual"] = cm->residual();
    std::cout << j.dump(2) << "\n";
  }
  std::cerr << "error: " << e.kind() << ": " << e.what();
  if (cm) std::cerr << " (residual " << cm->residual() << ")";
  std::cerr << "\n";
  return static_cast<int>(e.error_class());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotconc: concordance and rational-concordance obstructions for catalog knots"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--output", o.output, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--catalog", o.catalog, "catalog file (default: $KNOTCONC_CATALOG or the bundled one)");

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial and its factorization");
  alex->add_option("knot", o.knot)->required();
  auto* sig = app.add_subcommand("signature", "Levine-Tristram signature at a root of unity");
  sig->add_option("knot", o.knot)->required();
  sig->add_option("--omega", o.omega, "a/b for exp(2 pi i a/b)")->required();
  auto* sigfn = app.add_subcommand("sigfn", "signature function as a step table");
  sigfn->add_option("knot", o.knot)->required();
  auto* cab = app.add_subcommand("cable-obstruction", "finite-order test: sigma(w) = 0 but sigma(w^p) != 0");
  cab->add_option("knot", o.knot)->required();
  cab->add_option("--p", o.p)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 30));
  cab->add_option("--angle-denominator-bound", o.bound)->check(CLI::Range(std::int64_t{2}, std::int64_t{100000}));
  auto* fm = app.add_subcommand("fox-milnor", "Fox-Milnor test of delta0(t^k) delta1(t^k) for k <= k-max");
  fm->add_option("knot", o.knot)->required();
  fm->add_option("knot2", o.knot2, "second knot (default: the cable, or the unknot)");
  fm->add_option("--cable", o.cable, "compare with the (p,1)-cable");
  fm->add_option("--k-max", o.k_max)->check(CLI::Range(1, 1000));
  auto* leg = app.add_subcommand("legendrian", "front invariants; 'legendrian satellite P K' for satellites");
  leg->add_option("names", o.names, "front, or: satellite <pattern> <companion>")->required()->expected(1, 3);
  auto* t31 = app.add_subcommand("theorem31", "slice-Bennequin bounds for a satellite of a tb = 2g - 1 knot");
  t31->add_option("knot", o.knot)->required();
  t31->add_option("pattern", o.knot2)->required();
  auto* hc = app.add_subcommand("homology-check", "meridian relation mu0 = p mu1 in H1 of a surgery presentation");
  hc->add_option("presentation", o.knot, "catalog presentation (default: built-in winding-p model)");
  hc->add_option("--p", o.p)->required();
  hc->add_option("--mu0", o.mu0);
  hc->add_option("--mu1", o.mu1);
  auto* ver = app.add_subcommand("verdict", "combined rational-concordance verdict");
  ver->add_option("knot", o.knot)->required();
  ver->add_option("knot2", o.knot2);
  ver->add_option("--cable", o.cable);
  ver->add_option("--k-max", o.k_max)->check(CLI::Range(1, 1000));
  ver->add_option("--angle-denominator-bound", o.bound)->check(CLI::Range(std::int64_t{2}, std::int64_t{100000}));
  app.add_subcommand("catalog", "list catalog entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: BadFlag: " << e.what() << "\n";
    return static_cast<int>(ErrorClass::input);
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "legendrian") {
      if (o.names.size() == 3 && o.names[0] == "satellite") {
        cmd = "legendrian-satellite";
        o.knot = o.names[1];
        o.knot2 = o.names[2];
      } else if (o.names.size() == 1) {
        o.knot = o.names[0];
      } else {
        throw BadFlag("usage: legendrian <front> | legendrian satellite <pattern> <companion>");
      }
    }
    if ((cmd == "fox-milnor" || cmd == "verdict") && o.cable != 0 && o.cable < 2)
      throw BadFlag("--cable must be at least 2");
    const Report r = run(cmd, o);
    if (o.output == "json") std::cout << r.dump(2) << "\n";
    else std::cout << render_table(r);
  } catch (const Error& e) {
    return emit_error(e, o);
  } catch (const std::exception& e) {
    std::cerr << "error: InternalError: " << e.what() << "\n";
    return static_cast<int>(ErrorClass::internal);
  }
  return 0;
}
