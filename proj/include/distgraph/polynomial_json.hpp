#pragma once

#include <json.hpp>

#include "distgraph/polynomial.hpp"

namespace distgraph {

// {"coefficients": [[re, im], ...]} ascending by power; a bare number is
// read as a real coefficient.
nlohmann::json polynomial_to_json(const ComplexPolynomial& p);

// Throws Parse on schema errors and Precondition on degree < 2.
ComplexPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace distgraph
