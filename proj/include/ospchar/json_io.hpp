#pragma once

#include <json.hpp>

#include "ospchar/character_formulae.hpp"
#include "ospchar/laurent_series.hpp"
#include "ospchar/signed_permutation.hpp"
#include "ospchar/verification.hpp"
#include "ospchar/weight.hpp"

namespace ospchar {

using Json = nlohmann::ordered_json;

/// {"m", "delta", "eps"} with exact doubled values in "delta2", "eps2".
Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

/// {"perm": 1-based targets, "signs"}.
Json to_json(const SignedPermutation& s);
SignedPermutation signed_permutation_from_json(const Json& j);

/// {"m", "cutoff": D or "exact", "lower": L or null, "terms": [{"x","y","c"}]}
/// with coefficients as decimal strings, terms in canonical order.
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

/// {"m", "finite": [{"coeff","weight"}], "families": [{"base","slot","j_lo",
/// "j_hi" (or "inf"),"base_sign","scale"}]}.
Json to_json(const VermaExpansion& e);
VermaExpansion expansion_from_json(const Json& j);

/// Reports omit the elapsed time so output is reproducible.
Json to_json(const VerificationReport& r);

}  // namespace ospchar
