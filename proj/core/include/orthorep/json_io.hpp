#pragma once

#include <nlohmann/json.hpp>

#include "orthorep/garden.hpp"
#include "orthorep/graph.hpp"
#include "orthorep/linalg.hpp"
#include "orthorep/lss.hpp"
#include "orthorep/matrix_props.hpp"
#include "orthorep/polynomial.hpp"
#include "orthorep/sat_reduction.hpp"
#include "orthorep/unique_monomial.hpp"

namespace orthorep {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "orthorep/1";

// Matrices are arrays of rows of "p/q" strings; both directions are exact.
Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json monomial_to_json(const Monomial& m);
Json polynomial_to_json(const GardenPolynomial& p);
GardenPolynomial polynomial_from_json(const Json& j);

Json garden_to_json(const Garden& g);
Garden garden_from_json(const Json& j);

Json ordering_to_json(const Ordering& ord);
Json greedegree_to_json(const Graph& g, const GreedegreeResult& r);
Json success_to_json(const SuccessReport& r);
Json pattern_to_json(const PatternVerdict& v);
Json upper_zero_to_json(const UpperZeroVerdict& v);
Json sap_to_json(const SapVerdict& v);
Json mpu_to_json(const MpuVerdict& v);
Json unique_monomial_to_json(const UniqueMonomialReport& r);
Json bundle_to_json(const FormulaGraphBundle& b);

}  // namespace orthorep
