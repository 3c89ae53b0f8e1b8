#pragma once
#include <json.hpp>
#include <string>

#include "hodges/hodges.hpp"
#include "ktheory/ktheory.hpp"
#include "modlie/modlie.hpp"
#include "nocycle/coinvariant.hpp"
#include "nocycle/nocycle.hpp"

namespace suite {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// Adds the top-level "schema" field ("<kind>/v1") and pretty-prints; keys come out sorted.
std::string emit(json doc, const std::string& kind);

json to_json(const hodges::HodgesData& d);
json to_json(const hodges::ShirshovReport& r);
json to_json(const hodges::StructureReport& s);
json to_json(const nocycle::SweepReport& r);
json to_json(const nocycle::UpsilonReport& r);
json to_json(const modlie::LayerInfo& l);
json to_json(const modlie::VermaReport& r);
json to_json(const modlie::ChainData& c);
json to_json(const ktheory::RelationReport& r);
json to_json(const ktheory::ExtTable& t);
json to_json(const ktheory::KElt& x);
json gram_json(const std::vector<std::vector<scalars::LaurentBi>>& g);

}  // namespace suite
