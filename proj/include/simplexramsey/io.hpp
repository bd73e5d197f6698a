#pragma once

#include <json.hpp>

#include "simplexramsey/check.hpp"
#include "simplexramsey/family.hpp"
#include "simplexramsey/ramseytoy.hpp"

// JSON wire formats. Rationals travel as "p/q" strings in lowest terms,
// vertex indices are 1-based, subsets are sorted index arrays, and keys
// come out sorted (nlohmann's default ordering).

namespace sr {

using Json = nlohmann::json;

// Input with exactly one of "points" (list of coordinate lists) or
// "sqdist" (full square matrix); entries are rational strings.
SquaredDistanceMatrix parse_simplex_input(const Json& j);

Json sqdist_to_json(const RMatrix& m);
Json circumcenter_to_json(const CircumcenterResult& c);
Json decomposition_to_json(const DeficitDecomposition& d);
DeficitDecomposition decomposition_from_json(const Json& j);
Json embedding_to_json(const ProductEmbedding& e);
Json check_report_to_json(const CheckReport& r);
Json family_report_to_json(const FamilyReport& r);
Json arrow_verdict_to_json(const ArrowVerdict& v);

const char* verdict_name(CheckVerdict v);
const char* verdict_name(FamilyVerdict v);
const char* arrow_status_name(ArrowStatus s);

}  // namespace sr
