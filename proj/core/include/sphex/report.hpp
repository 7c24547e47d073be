#pragma once

#include "json.hpp"
#include "sphex/exclusion.hpp"

namespace sphex {

using OrderedJson = nlohmann::ordered_json;

// Stable field order; with trace=true every rule application is included
// with its concrete witnesses so reports can be re-verified offline.
OrderedJson report_to_json(const ExclusionReport& rep, bool trace);
ExclusionReport report_from_json(const OrderedJson& j, const CharacterTable& t);

OrderedJson lattice_to_json(const SubgroupLattice& lat);

} // namespace sphex
