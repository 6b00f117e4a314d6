#pragma once
// JSON encoding of polynomials, complexes and reports.

#include "novikov/complexes.hpp"
#include "novikov/detector.hpp"

#include <json.hpp>

#include <string>

namespace nov {

using Json = nlohmann::ordered_json;

Json poly_to_json(const LaurentPoly& p);
// throws InputError naming the JSON pointer of the offending value
LaurentPoly poly_from_json(const Json& j, const std::string& where = "");

Json complex_to_json(const FreeComplex& c);
FreeComplex complex_from_json(const Json& j);
// parses text, reporting byte offsets of syntax errors
FreeComplex complex_from_text(const std::string& text);

Json verdict_to_json(const FlavorVerdict& v);
Json report_to_json(const DominationReport& r);
Json witness_to_json(const Witness& w);
Json homology_to_json(const std::map<int, HomologyGroup>& h);

}  // namespace nov
