#include "knotconc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <type_traits>
#include <variant>

namespace knotconc {

namespace {

std::string turn_str(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", t);
  return buf;
}

Report cited(const Cited<int>& c) { return Report{{"value", c.value}, {"citation", c.citation}}; }

}  // namespace

Report to_json(const RootOfUnity& w) { return w.str(); }

Report to_json(const LegendrianInvariants& inv) {
  Report j;
  if (inv.writhe) j["writhe"] = *inv.writhe;
  if (inv.cusps) j["cusps"] = *inv.cusps;
  if (inv.down_left_cusps) j["down_left_cusps"] = *inv.down_left_cusps;
  if (inv.up_right_cusps) j["up_right_cusps"] = *inv.up_right_cusps;
  j["tb"] = inv.tb;
  j["rot"] = inv.rot;
  return j;
}

Report to_json(const GenusBounds& b) { return Report{{"g4_at_least", b.g4}, {"tau_at_least", b.tau}, {"s_at_least", b.s}}; }

Report to_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> Report {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SignatureWitness>) {
          return Report{{"type", "signature"},
                        {"omega", x.omega.str()},
                        {x.first_label, x.first},
                        {x.second_label, x.second},
                        {"verified", "exact signature at both points"}};
        } else if constexpr (std::is_same_v<T, FactorWitness>) {
          return Report{{"type", "fox-milnor-failure"},
                        {"k", x.k},
                        {"factor", format(x.factor)},
                        {"multiplicity", x.multiplicity},
                        {"self_reciprocal", x.self_reciprocal},
                        {"irreducible", x.irreducible}};
        } else if constexpr (std::is_same_v<T, TauWitness>) {
          return Report{{"type", "tau"},
                        {"tau0", x.tau0},
                        {"tau1", x.tau1},
                        {"citation0", x.citation0},
                        {"citation1", x.citation1}};
        } else {
          return Report{{"type", "fox-milnor-pass"}, {"k", x.k}, {"f", format(x.f)}};
        }
      },
      w);
}

Report to_json(const ObstructionReport& r) {
  Report j;
  j["verdict"] = to_string(r.verdict);
  if (r.category) j["category"] = to_string(*r.category);
  if (r.p) j["p"] = *r.p;
  if (r.k_max) j["k_max"] = *r.k_max;
  if (r.angle_denominator_bound) j["angle_denominator_bound"] = *r.angle_denominator_bound;
  Report w = Report::array();
  for (const auto& x : r.witnesses) w.push_back(to_json(x));
  j["witnesses"] = w;
  j["notes"] = r.notes;
  return j;
}

Report to_json(const SignatureFunction& s) {
  Report j;
  j["jump_polynomial"] = format(s.jump_polynomial());
  j["identically_zero"] = s.identically_zero();
  Report jumps = Report::array();
  for (const auto& x : s.jumps()) {
    Report e{{"turn", turn_str(x.turn)}};
    if (x.exact) e["x"] = x.x_lo.str();
    else e["x_interval"] = Report::array({x.x_lo.str(), x.x_hi.str()});
    jumps.push_back(e);
  }
  j["jumps"] = jumps;
  Report arcs = Report::array();
  for (const auto& a : s.arcs())
    arcs.push_back(Report{{"from_turn", turn_str(a.start_turn)},
                          {"to_turn", turn_str(a.end_turn)},
                          {"sample", a.sample.str()},
                          {"value", a.value}});
  j["arcs"] = arcs;
  return j;
}

Report to_json(const AbelianGroupDescription& g) {
  Report j;
  j["group"] = g.str();
  j["rank"] = g.rank;
  Report t = Report::array();
  for (const auto& d : g.torsion) t.push_back(d.str());
  j["torsion"] = t;
  Report im;
  for (const auto& [n, v] : g.images) im[n] = g.element_str(v);
  j["classes"] = im;
  return j;
}

Report to_json(const MeridianCheck& m) {
  Report j;
  j["relation"] = m.mu0 + " = " + std::to_string(m.p) + "*" + m.mu1;
  j["holds_integrally"] = true;
  j["holds_after_inverting_p"] = true;
  j["spans_free_summand"] = m.spans_free_summand;
  j["H1"] = to_json(m.integral);
  j["H1_localized"] = to_json(m.localized);
  j["summary"] = m.summary;
  return j;
}

Report to_json(const Theorem31Report& r) {
  Report j;
  j["companion"] = r.companion;
  j["pattern"] = r.pattern;
  j["genus"] = r.genus;
  j["companion_legendrian"] = to_json(r.companion_inv);
  j["stabilized"] = to_json(r.stabilized);
  j["satellite_legendrian"] = to_json(r.satellite);
  j["satellite_bounds"] = to_json(r.satellite_bounds);
  j["companion_values"] = Report{{"g4", r.companion_sharp.g4}, {"tau", r.companion_sharp.tau}, {"s", r.companion_sharp.s}};
  j["g4_increases"] = r.g4_increases;
  j["tau_increases"] = r.tau_increases;
  j["s_increases"] = r.s_increases;
  if (r.companion_topologically_slice) j["companion_topologically_slice"] = *r.companion_topologically_slice;
  if (r.satellite_topologically_slice) j["satellite_topologically_slice"] = *r.satellite_topologically_slice;
  j["notes"] = r.notes;
  return j;
}

Report to_json(const KnotProfile& k) {
  Report j;
  j["name"] = k.name;
  if (k.seifert) j["seifert_matrix"] = format_matrix(k.seifert->matrix());
  if (k.signature_pullback != 1) j["signature_pullback"] = k.signature_pullback;
  if (k.declared_alexander) j["declared_alexander"] = format(*k.declared_alexander);
  if (k.genus) j["genus"] = cited(*k.genus);
  if (k.tau) j["tau"] = cited(*k.tau);
  if (k.tau_caveat) j["tau_caveat"] = *k.tau_caveat;
  if (k.s) j["s"] = cited(*k.s);
  if (k.slice_genus) {
    Report b;
    if (k.slice_genus->lower) b["lower"] = *k.slice_genus->lower;
    if (k.slice_genus->upper) b["upper"] = *k.slice_genus->upper;
    b["citation"] = k.slice_genus->citation;
    j["slice_genus"] = b;
  }
  if (const auto ts = k.topologically_slice_status())
    j["topologically_slice"] = Report{{"value", ts->value}, {"citation", ts->citation}};
  if (k.legendrian)
    j["legendrian"] = Report{{"tb", k.legendrian->tb}, {"rot", k.legendrian->rot}, {"source", k.legendrian->source}};
  if (k.power_irreducible_citation) j["power_irreducible"] = *k.power_irreducible_citation;
  return j;
}

Report to_json(const CatalogEntry& e) {
  Report j;
  j["name"] = e.name;
  j["kind"] = to_string(e.kind);
  if (!e.description.empty()) j["description"] = e.description;
  switch (e.kind) {
    case EntryKind::knot: {
      Report p = to_json(e.profile);
      p.erase("name");
      for (auto it = p.begin(); it != p.end(); ++it) j[it.key()] = it.value();
      if (!e.fronts.empty()) j["fronts"] = e.fronts;
      if (!e.presentations.empty()) j["presentations"] = e.presentations;
      break;
    }
    case EntryKind::front:
      j["file"] = e.file;
      if (e.represents) j["represents"] = *e.represents;
      break;
    case EntryKind::pattern:
      j["file"] = e.file;
      j["winding"] = e.pattern->winding;
      j["tilde_class"] = Report{{"value", to_string(e.pattern->tilde)}, {"citation", e.pattern->tilde_citation}};
      break;
    case EntryKind::presentation:
      j["file"] = e.file;
      j["size"] = e.presentation->size();
      break;
  }
  return j;
}

namespace {

std::string scalar_str(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool flat_object(const Report& v) {
  if (!v.is_object()) return false;
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

void render(const Report& v, int indent, std::ostringstream& os);

void render_rows(const Report& arr, int indent, std::ostringstream& os) {
  std::vector<std::string> cols;
  for (const auto& row : arr)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    width[c] = cols[c].size();
    for (const auto& row : arr)
      if (row.contains(cols[c])) width[c] = std::max(width[c], scalar_str(row[cols[c]]).size());
  }
  auto line = [&](auto cell) {
    os << std::string(static_cast<std::size_t>(indent), ' ');
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::string s = cell(c);
      os << s;
      if (c + 1 < cols.size()) os << std::string(width[c] - s.size() + 2, ' ');
    }
    os << "\n";
  };
  line([&](std::size_t c) { return cols[c]; });
  line([&](std::size_t c) { return std::string(width[c], '-'); });
  for (const auto& row : arr)
    line([&](std::size_t c) { return row.contains(cols[c]) ? scalar_str(row[cols[c]]) : std::string("-"); });
}

void render(const Report& v, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      const Report& x = it.value();
      if (!x.is_structured()) {
        os << pad << it.key() << ": " << scalar_str(x) << "\n";
      } else if (x.empty()) {
        os << pad << it.key() << ": (none)\n";
      } else {
        os << pad << it.key() << ":\n";
        render(x, indent + 2, os);
      }
    }
  } else if (v.is_array()) {
    bool rows = !v.empty();
    for (const auto& x : v) rows = rows && flat_object(x) && x.size() == v[0].size();
    for (std::size_t i = 0; rows && i < v.size(); ++i)
      for (auto it = v[0].begin(); rows && it != v[0].end(); ++it) rows = v[i].contains(it.key());
    if (rows) {
      render_rows(v, indent, os);
      return;
    }
    for (const auto& x : v) {
      if (x.is_structured()) {
        os << pad << "-\n";
        render(x, indent + 2, os);
      } else {
        os << pad << "- " << scalar_str(x) << "\n";
      }
    }
  } else {
    os << pad << scalar_str(v) << "\n";
  }
}

}  // namespace

std::string render_table(const Report& r) {
  std::ostringstream os;
  render(r, 0, os);
  return os.str();
}

}  // namespace knotconc
