#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "tracefree/cover.hpp"
#include "tracefree/relations.hpp"
#include "tracefree/slice.hpp"

namespace tracefree {

using Json = nlohmann::ordered_json;

/// {"re": .., "im": .., "exact": "p/q"}; "exact" only when known.
Json to_json(const ComplexValue& v);

/// {"12": {...}, "13": {...}} keyed by the index digits of each variable.
Json to_json(const Assignment& a);

/// {"pairs": .., "triples": ..}
Json to_json(const S0Point& p);

/// {"pairs": .., "lift_status": .., "residuals": {..}, "lifts": [..]}
Json to_json(const F2Point& p);

Json to_json(const CoverPoint& p);

/// {"variable": "x13", "coefficients": ["2", "-3", ...]} (ascending powers),
/// plus "text".
Json eliminant_json(const VarKey& v, const UPoly& p);

/// Univariate polynomial as text in the given variable.
std::string to_string(const UPoly& p, const VarKey& v);

/// One generator per line, canonical order.
std::string ideal_text(const Ideal& ideal);

/// {"provenance": .., "ring": [...], "generators": [...]}
Json to_json(const Ideal& ideal);

/// {"generators": [...], "relators": [...]}
Json to_json(const GroupPresentation& p);

}  // namespace tracefree
