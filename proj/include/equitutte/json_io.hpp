#pragma once

#include <json.hpp>

#include <string>

#include "equitutte/matroid.hpp"
#include "equitutte/poly.hpp"
#include "equitutte/valuation.hpp"

namespace equitutte {

// Order-preserving JSON so that emitted documents are canonical and
// re-serialize byte-for-byte after a parse round-trip.
using Json = nlohmann::ordered_json;

Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// A polynomial is a list of {"coeff": "<integer>", "monomial": {...}} in the
// canonical term order; monomial keys follow the variable order.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json fraction_to_json(const PolyFraction& f);
PolyFraction fraction_from_json(const Json& j);

Json combination_to_json(const SignedCombination& c);
SignedCombination combination_from_json(const Json& j);

Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);
std::string dump_json(const Json& j);

}  // namespace equitutte
