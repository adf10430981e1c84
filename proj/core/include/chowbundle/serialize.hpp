#pragma once

#include <nlohmann/json.hpp>

#include "chowbundle/polynomial.hpp"
#include "chowbundle/series.hpp"

namespace chowbundle {

// Canonical JSON forms.
//
//   polynomial: [{"m": {"a1": 2, "a2'": 1}, "n": "-3", "d": "2"}, ...]
//               terms in canonical monomial order, zero exponents omitted
//   series:     {"order": N, "coeffs": [poly_0, ..., poly_N]}

nlohmann::json to_json(const GradedPolynomial& p);
nlohmann::json to_json(const TruncatedSeries& s);

/// Parses a polynomial over `ring`; unknown variables or malformed terms throw StructuralError.
GradedPolynomial polynomial_from_json(const RingPtr& ring, const nlohmann::json& j);
TruncatedSeries series_from_json(const RingPtr& ring, const nlohmann::json& j);

}  // namespace chowbundle
