#include "knotconc/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace knotconc {

namespace {

using Json = nlohmann::json;
namespace fs = std::filesystem;

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + p.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

class EntryReader {
 public:
  EntryReader(const Json& j, std::size_t index, const fs::path& base) : j_(j), base_(base) {
    if (!j.is_object()) throw ParseError("catalog entry " + std::to_string(index) + " is not an object");
    if (!j.contains("name") || !j["name"].is_string())
      throw ParseError("catalog entry " + std::to_string(index) + ": field 'name' missing or not a string");
    name_ = j["name"].get<std::string>();
  }

  const std::string& name() const { return name_; }
  bool has(const char* f) const { return j_.contains(f); }

  [[noreturn]] void fail(const std::string& field, const std::string& msg) const {
    throw ParseError("catalog entry '" + name_ + "' field '" + field + "': " + msg);
  }

  const Json& at(const char* f) const {
    used_.insert(f);
    return j_.at(f);
  }

  std::string str(const char* f) const {
    const Json& v = at(f);
    if (!v.is_string()) fail(f, "expected a string");
    return v.get<std::string>();
  }

  int integer(const Json& v, const std::string& f) const {
    if (!v.is_number_integer()) fail(f, "expected an integer");
    return v.get<int>();
  }

  std::string citation(const Json& v, const std::string& f) const {
    if (!v.contains("citation") || !v["citation"].is_string() || v["citation"].get<std::string>().empty())
      fail(f, "declared value needs a nonempty 'citation'");
    return v["citation"].get<std::string>();
  }

  std::optional<Cited<int>> cited_int(const char* f) const {
    if (!has(f)) return std::nullopt;
    const Json& v = at(f);
    if (!v.is_object() || !v.contains("value")) fail(f, "expected {value, citation}");
    return Cited<int>{integer(v["value"], f), citation(v, f)};
  }

  std::optional<Cited<bool>> cited_bool(const char* f) const {
    if (!has(f)) return std::nullopt;
    const Json& v = at(f);
    if (!v.is_object() || !v.contains("value") || !v["value"].is_boolean()) fail(f, "expected {value: bool, citation}");
    return Cited<bool>{v["value"].get<bool>(), citation(v, f)};
  }

  std::vector<std::string> names(const char* f) const {
    std::vector<std::string> out;
    if (!has(f)) return out;
    const Json& v = at(f);
    if (!v.is_array()) fail(f, "expected a list of names");
    for (const auto& x : v) {
      if (!x.is_string()) fail(f, "expected a list of names");
      out.push_back(x.get<std::string>());
    }
    return out;
  }

  fs::path file(const char* f) const {
    const fs::path p = str(f);
    return p.is_absolute() ? p : base_ / p;
  }

  void check_unused() const {
    for (const auto& [k, v] : j_.items())
      if (k != "name" && !used_.count(k)) fail(k, "unknown field");
  }

 private:
  const Json& j_;
  fs::path base_;
  std::string name_;
  mutable std::set<std::string> used_;
};

IntMatrix read_matrix(const EntryReader& r, const Json& v) {
  if (!v.is_array()) r.fail("seifert_matrix", "expected a list of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : v) {
    if (!row.is_array()) r.fail("seifert_matrix", "expected a list of rows");
    std::vector<std::int64_t> vals;
    for (const auto& x : row) {
      if (!x.is_number_integer()) r.fail("seifert_matrix", "entries must be integers");
      vals.push_back(x.get<std::int64_t>());
    }
    if (vals.size() != v.size()) r.fail("seifert_matrix", "matrix is not square");
    rows.push_back(std::move(vals));
  }
  return parse_int_matrix(rows);
}

CatalogEntry read_knot(const EntryReader& r) {
  CatalogEntry e;
  e.kind = EntryKind::knot;
  KnotProfile& k = e.profile;
  k.name = r.name();
  if (r.has("seifert_matrix")) k.seifert = SeifertMatrix(read_matrix(r, r.at("seifert_matrix")), k.name);
  if (r.has("alexander")) {
    const Json& v = r.at("alexander");
    if (!v.is_object() || !v.contains("value") || !v["value"].is_string())
      r.fail("alexander", "expected {value: \"polynomial\", citation}");
    r.citation(v, "alexander");
    try {
      k.declared_alexander = parse_laurent(v["value"].get<std::string>());
    } catch (const ParseError& err) {
      r.fail("alexander", err.what());
    }
    if (k.seifert && !doteq(*k.declared_alexander, alexander(*k.seifert)))
      throw ValidationError("catalog entry '" + k.name + "': declared Alexander polynomial disagrees with the "
                            "Seifert matrix");
  }
  k.genus = r.cited_int("genus");
  k.tau = r.cited_int("tau");
  k.s = r.cited_int("s");
  k.topologically_slice = r.cited_bool("topologically_slice");
  if (r.has("slice_genus")) {
    const Json& v = r.at("slice_genus");
    if (!v.is_object()) r.fail("slice_genus", "expected {lower?, upper?, citation}");
    SliceGenusBounds b;
    if (v.contains("lower")) b.lower = r.integer(v["lower"], "slice_genus");
    if (v.contains("upper")) b.upper = r.integer(v["upper"], "slice_genus");
    b.citation = r.citation(v, "slice_genus");
    k.slice_genus = b;
  }
  if (r.has("power_irreducible")) {
    const Json& v = r.at("power_irreducible");
    if (!v.is_object()) r.fail("power_irreducible", "expected {citation}");
    k.power_irreducible_citation = r.citation(v, "power_irreducible");
  }
  if (r.has("legendrian")) {
    const Json& v = r.at("legendrian");
    if (!v.is_object()) r.fail("legendrian", "expected {front} or {tb, rot, citation}");
    if (v.contains("front")) {
      if (!v["front"].is_string()) r.fail("legendrian", "'front' must name a front entry");
      // Resolved once every entry is read.
      k.legendrian = LegendrianDatum{0, 0, "front:" + v["front"].get<std::string>()};
    } else {
      if (!v.contains("tb") || !v.contains("rot")) r.fail("legendrian", "expected {front} or {tb, rot, citation}");
      k.legendrian = LegendrianDatum{r.integer(v["tb"], "legendrian"), r.integer(v["rot"], "legendrian"),
                                     r.citation(v, "legendrian")};
    }
  }
  e.fronts = r.names("fronts");
  e.presentations = r.names("presentations");
  try {
    k.validate();
  } catch (const ValidationError& err) {
    throw ValidationError("catalog entry '" + k.name + "': " + err.what());
  }
  return e;
}

FrontDiagram read_front_file(const EntryReader& r, CatalogEntry& e) {
  const fs::path p = r.file("front");
  e.file = r.str("front");
  FrontDiagram d = parse_front(read_file(p), r.name());
  invariants(d);  // closed, one component, marker on a cusp
  return d;
}

}  // namespace

const char* to_string(EntryKind k) {
  switch (k) {
    case EntryKind::knot: return "knot";
    case EntryKind::pattern: return "pattern";
    case EntryKind::front: return "front";
    case EntryKind::presentation: return "presentation";
  }
  return "knot";
}

Catalog::Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {}

const CatalogEntry* Catalog::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

const CatalogEntry& Catalog::entry(const std::string& name) const {
  if (const auto* e = find(name)) return *e;
  throw UnknownKnot("no catalog entry named '" + name + "'");
}

const KnotProfile& Catalog::knot(const std::string& name) const {
  const CatalogEntry& e = entry(name);
  if (e.kind != EntryKind::knot) throw UnknownKnot("'" + name + "' is a " + to_string(e.kind) + ", not a knot");
  return e.profile;
}

const FrontDiagram& Catalog::front(const std::string& name) const {
  const CatalogEntry& e = entry(name);
  if (!e.front) throw UnknownKnot("'" + name + "' has no front diagram");
  return *e.front;
}

PatternData Catalog::pattern(const std::string& name) const {
  const CatalogEntry& e = entry(name);
  if (!e.pattern) throw UnknownKnot("'" + name + "' is not a pattern");
  return *e.pattern;
}

const SurgeryPresentation& Catalog::presentation(const std::string& name) const {
  const CatalogEntry& e = entry(name);
  if (!e.presentation) throw UnknownKnot("'" + name + "' is not a surgery presentation");
  return *e.presentation;
}

Catalog parse_catalog(std::string_view text, const fs::path& base_dir) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw ParseError("catalog line " + std::to_string(line_of(text, err.byte)) + ": " + err.what());
  }
  if (!doc.is_array()) throw ParseError("catalog: top level must be a list of entries");

  std::vector<CatalogEntry> entries;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const EntryReader r(doc[i], i, base_dir);
    if (!seen.insert(r.name()).second) throw ValidationError("catalog: duplicate entry '" + r.name() + "'");
    const std::string kind = r.has("kind") ? r.str("kind") : "knot";
    CatalogEntry e;
    if (kind == "knot") {
      e = read_knot(r);
    } else if (kind == "front") {
      e.kind = EntryKind::front;
      e.front = read_front_file(r, e);
      if (r.has("represents")) e.represents = r.str("represents");
    } else if (kind == "pattern") {
      e.kind = EntryKind::pattern;
      e.front = read_front_file(r, e);
      if (!r.has("tilde_class")) r.fail("tilde_class", "patterns need {value, citation}");
      const Json& v = r.at("tilde_class");
      if (!v.is_object() || !v.contains("value") || !v["value"].is_string())
        r.fail("tilde_class", "expected {value, citation}");
      e.pattern = pattern_from_front(*e.front, parse_tilde_class(v["value"].get<std::string>()),
                                     r.citation(v, "tilde_class"));
    } else if (kind == "presentation") {
      e.kind = EntryKind::presentation;
      e.file = r.str("file");
      e.presentation = parse_presentation(read_file(r.file("file")), r.name());
      e.presentation->name = r.name();
    } else {
      r.fail("kind", "expected knot, front, pattern or presentation");
    }
    e.name = r.name();
    if (r.has("description")) e.description = r.str("description");
    r.check_unused();
    entries.push_back(std::move(e));
  }

  Catalog cat(std::move(entries));
  // Resolve cross references.
  std::vector<CatalogEntry> resolved = cat.entries();
  for (auto& e : resolved) {
    auto& L = e.profile.legendrian;
    if (L && L->source.rfind("front:", 0) == 0) {
      const std::string fname = L->source.substr(6);
      const CatalogEntry* f = cat.find(fname);
      if (!f || f->kind != EntryKind::front)
        throw ValidationError("catalog entry '" + e.name + "': legendrian front '" + fname + "' is not a front entry");
      const LegendrianInvariants inv = invariants(*f->front);
      L = LegendrianDatum{inv.tb, inv.rot, "front " + fname};
    }
    for (const auto& n : e.fronts) {
      const CatalogEntry* f = cat.find(n);
      if (!f || (f->kind != EntryKind::front && f->kind != EntryKind::pattern))
        throw ValidationError("catalog entry '" + e.name + "': '" + n + "' is not a front entry");
    }
    for (const auto& n : e.presentations) {
      const CatalogEntry* f = cat.find(n);
      if (!f || f->kind != EntryKind::presentation)
        throw ValidationError("catalog entry '" + e.name + "': '" + n + "' is not a presentation entry");
    }
    if (e.represents) {
      const CatalogEntry* k = cat.find(*e.represents);
      if (!k || k->kind != EntryKind::knot)
        throw ValidationError("front '" + e.name + "': represents unknown knot '" + *e.represents + "'");
    }
  }
  return Catalog(std::move(resolved));
}

Catalog load_catalog(const fs::path& path) {
  const std::string text = read_file(path);
  return parse_catalog(text, path.parent_path());
}

fs::path default_catalog_path() {
  if (const char* env = std::getenv("KNOTCONC_CATALOG"); env && *env) return env;
#ifdef KNOTCONC_DEFAULT_CATALOG
  return KNOTCONC_DEFAULT_CATALOG;
#else
  return "catalog/catalog.json";
#endif
}

}  // namespace knotconc
