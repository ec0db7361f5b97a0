#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "bigraph.hpp"
#include "derivations.hpp"
#include "embedding.hpp"
#include "maps.hpp"
#include "partition.hpp"
#include "profile.hpp"
#include "sbasis.hpp"
#include "spoly.hpp"

namespace ydc {

// ordered_json keeps insertion order, so output bytes are fixed by the code
// path alone.
using Json = nlohmann::ordered_json;

// Parse helpers; malformed text is an invalid_input error, never an exception
// from the json library.
Json parse_json_text(const std::string& text);
std::string dump_json(const Json& j);

Json profile_to_json(const Profile& p);
Profile profile_from_json(const Json& j);

Json graph_to_json(const BipartiteGraph& g);
BipartiteGraph graph_from_json(const Json& j);

Json graph_sum_to_json(const GraphSum& s);
GraphSum graph_sum_from_json(const Json& j);

Json decorated_sum_to_json(const DecoratedSum& s);
DecoratedSum decorated_sum_from_json(const Json& j);

Json spoly_to_json(const SPolynomial& p);
SPolynomial spoly_from_json(const Json& j);

Json zpoly_to_json(const ZPolynomial& p);

Json criterion_to_json(const CriterionReport& r);
Json scan_to_json(const ScanReport& r);
Json zfit_to_json(const ZFit& f);
Json decomposition_to_json(const DecompositionReport& r);
Json fit_to_json(const FitReport& r);
Json map_to_json(const GluedMap& m);
Json map_sums_to_json(const MapSums& s);
Json character_to_json(const CharacterResult& c);
Json mc_to_json(const McResult& r, std::uint64_t seed);

// Full decompose pipeline on one sum: criterion, S-basis fit on the default
// train/test split, and the volume identity on omega.
Json decompose_report(const GraphSum& s, const Profile& omega);

}  // namespace ydc
