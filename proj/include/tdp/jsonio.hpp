#pragma once

#include <json.hpp>

#include "tdp/polynomial.hpp"

namespace tdp {

// Field order in emitted objects is part of the output contract.
using Json = nlohmann::ordered_json;

// Magnitudes up to 2^53 - 1 become JSON numbers; anything larger becomes a
// decimal string, so consumers with double-backed parsers stay exact.
Json json_int(const mpz_class& value);

// Dense ascending coefficient array.
Json coeffs_json(const Polynomial& p);

// Accepts what coeffs_json emits: an array of integers and decimal strings.
Polynomial poly_from_json(const Json& j);

}  // namespace tdp
