#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "kmersenne/identities.hpp"
#include "kmersenne/polynomial.hpp"
#include "kmersenne/sequences.hpp"

namespace kmersenne {

// JSON value schema (big integers travel as decimal strings):
//   dyadic:      {"re": "-1", "im": "0", "exp2": 2}
//   polynomial:  {"coeffs": [dyadic, ...]}   (ascending, canonical length)
// A term record wraps one of these:
//   {"family": "GM", "n": 3, "k": 5, "value": ...}
// Number families carry the dyadic form, polynomial families the coeffs form.

nlohmann::json value_to_json(const GaussianDyadic& v);
nlohmann::json value_to_json(const GaussianPolynomial& p);
nlohmann::json value_to_json(const IntPolynomial& p);

GaussianDyadic dyadic_from_json(const nlohmann::json& j);

/// Parses either value form; dyadics come back as degree-0 polynomials.
GaussianPolynomial value_from_json(const nlohmann::json& j);

nlohmann::json term_record(Family family, std::uint64_t n, std::uint64_t k,
                           const GaussianPolynomial& value);

nlohmann::json report_to_json(const IdentityReport& report);
nlohmann::json suite_result_to_json(const SuiteResult& result);

}  // namespace kmersenne
