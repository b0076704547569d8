#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "whit/lemmas.hpp"
#include "whit/solver.hpp"

namespace whit {

// JSON schemas. Numerators and denominators are decimal strings; weights,
// exponents, k and r are written as numbers and read from numbers or decimal
// strings.
//
//   Scalar        {"monomials":[{"e":[e1,e2,e3],"num":"-3","den":"2"}]}
//   LieElt        {"terms":[{"i":1,"alpha":[a,b],"coeff":Scalar}]}
//   Partition     [[a,b],...] ascending
//   Triple        {"lambda":Partition,"mu":Partition,"k":k}
//   ModuleVector  {"terms":[{"lambda":..,"mu":..,"k":k,"r":r,"coeff":Scalar}]}
//   ZPoly         {"coeffs":[Scalar,...]} ascending powers of z
//   Truncation    {"cap":[a,b],"entries":[[a,b],...],"kmax":k,"rmax":r[,"max_length":n]}
//
// Readers throw ParseError on malformed input.

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Json to_json(const Weight& w);
Json to_json(const LieElt& x);
Json to_json(const Partition& p);
Json to_json(const Triple& t);
Json to_json(const ModuleVector& v);
Json to_json(const ZPoly& f);
Json to_json(const Truncation& t);
Json to_json(const LemmaReport& r);
Json to_json(const ReductionTranscript& t);

Scalar scalar_from_json(const Json& j);
Weight weight_from_json(const Json& j);
LieElt lie_from_json(const Json& j);
Partition partition_from_json(const Json& j);
Triple triple_from_json(const Json& j);
ModuleVector vector_from_json(const Json& j);
ZPoly poly_from_json(const Json& j);
Truncation truncation_from_json(const Json& j);

/// Parses JSON text; syntax errors become ParseError at the reported byte.
Json parse_json(std::string_view text);

}  // namespace whit
