#include "distgraph/polynomial_json.hpp"

#include "distgraph/error.hpp"

namespace distgraph {

using nlohmann::json;

json polynomial_to_json(const ComplexPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients())
    coeffs.push_back(json::array({c.real(), c.imag()}));
  return json{{"coefficients", std::move(coeffs)}};
}

ComplexPolynomial polynomial_from_json(const json& j) {
  std::vector<Complex> coeffs;
  try {
    for (const auto& c : j.at("coefficients")) {
      if (c.is_number()) {
        coeffs.emplace_back(c.get<double>(), 0.0);
      } else if (c.is_array() && c.size() == 2) {
        coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
      } else {
        throw Error(ErrorCode::Parse,
                    "coefficient must be a number or [re, im]");
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("polynomial: ") + e.what());
  }
  return ComplexPolynomial(std::move(coeffs));
}

}  // namespace distgraph
