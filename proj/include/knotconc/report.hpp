#pragma once

#include <string>

#include "json.hpp"
#include "knotconc/cabling.hpp"
#include "knotconc/catalog.hpp"
#include "knotconc/legendrian.hpp"
#include "knotconc/surgery.hpp"

namespace knotconc {

using Report = nlohmann::ordered_json;

Report to_json(const RootOfUnity& w);
Report to_json(const LegendrianInvariants& inv);
Report to_json(const GenusBounds& b);
Report to_json(const Witness& w);
Report to_json(const ObstructionReport& r);
Report to_json(const SignatureFunction& s);
Report to_json(const AbelianGroupDescription& g);
Report to_json(const MeridianCheck& m);
Report to_json(const Theorem31Report& r);
Report to_json(const KnotProfile& k);  // declared data only
Report to_json(const CatalogEntry& e);

/// Plain-text rendering: nested objects become indented "key: value"
/// lines, lists of flat objects become aligned tables.
std::string render_table(const Report& r);

}  // namespace knotconc
