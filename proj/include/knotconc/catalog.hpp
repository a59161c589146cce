#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotconc/legendrian.hpp"
#include "knotconc/profile.hpp"
#include "knotconc/surgery.hpp"

namespace knotconc {

enum class EntryKind { knot, pattern, front, presentation };
const char* to_string(EntryKind k);

/// One catalog record. Knots carry a profile; fronts and patterns carry a
/// front diagram read from a separate event-list file; presentations carry
/// a linking matrix file. Computed values are never stored.
struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::knot;
  std::string description;
  KnotProfile profile;
  std::optional<FrontDiagram> front;
  std::optional<std::string> represents;  // knot drawn by a front
  std::optional<PatternData> pattern;
  std::optional<SurgeryPresentation> presentation;
  std::vector<std::string> fronts, presentations;  // names of related entries
  std::string file;                                // front or presentation path
};

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<CatalogEntry> entries);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const std::string& name) const;
  /// Each throws UnknownKnot when the name is missing or of the wrong kind.
  const CatalogEntry& entry(const std::string& name) const;
  const KnotProfile& knot(const std::string& name) const;
  const FrontDiagram& front(const std::string& name) const;  // fronts and patterns
  PatternData pattern(const std::string& name) const;
  const SurgeryPresentation& presentation(const std::string& name) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// Parses a JSON array of entries; relative file references resolve
/// against base_dir. Blank text yields an empty catalog.
Catalog parse_catalog(std::string_view text, const std::filesystem::path& base_dir);
Catalog load_catalog(const std::filesystem::path& path);

/// $KNOTCONC_CATALOG if set, else the catalog shipped with the sources.
std::filesystem::path default_catalog_path();

}  // namespace knotconc
