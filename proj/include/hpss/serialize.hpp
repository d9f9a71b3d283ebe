#pragma once

#include <json.hpp>
#include <string>

#include "hpss/algebra.hpp"
#include "hpss/exterior.hpp"

namespace hpss {

using Json = nlohmann::ordered_json;

/// Throws Error(SchemaError) on malformed documents.
RealLieAlgebraSpec spec_from_json(const Json& doc);
RealLieAlgebraSpec parse_spec(const std::string& text);
/// Canonical form: pairs with i < j, terms sorted by k, zero coefficients dropped.
Json spec_to_json(const RealLieAlgebraSpec& spec);
std::string emit_spec(const RealLieAlgebraSpec& spec);

Json monomial_to_json(Monomial m, std::size_t n);
Json element_to_json(const SparseElement& x);
/// Terms must all have bidegree (p,q); an empty array is the zero element of that bidegree.
SparseElement element_from_json(const Json& doc, Side side, std::size_t n, int p, int q);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& doc);

}  // namespace hpss
