#pragma once

#include <json.hpp>

#include "circunit/circular_units.hpp"
#include "circunit/congruence.hpp"
#include "circunit/cyclotomic.hpp"
#include "circunit/funnel.hpp"
#include "circunit/groupring.hpp"

namespace circunit {

using Json = nlohmann::ordered_json;

// Integers are written as decimal strings throughout.
Json to_json(const CycInt& a);
CycInt cycint_from_json(const Json& j);

Json to_json(const UnitWord& w);
UnitWord word_from_json(Level level, const Json& j);

Json to_json(const FunnelPartition& p);
Json to_json(const GeneratorSystem& s);
Json to_json(const IdentityReport& r);
Json to_json(const GroupRingElt& u, const std::string& word);
// With timing = false the elapsed time is written as 0 so repeated runs are byte-identical.
Json to_json(const Certificate& c, bool timing = true);

}  // namespace circunit
