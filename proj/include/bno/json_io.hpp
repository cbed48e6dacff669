#pragma once

#include "bno/normal_order.hpp"
#include "bno/weight.hpp"

#include <json.hpp>

#include <string>

namespace bno {

// {"monomials":[{"exponents":{"w-1":1,"w3":2},"coeff":"1"}, ...]} with
// coefficients as decimal strings.
nlohmann::json to_json(const WeightPolynomial& poly);
WeightPolynomial weight_polynomial_from_json(const nlohmann::json& j);

// {"word":"(da)^3","model":"p","terms":[{"creators":2,"annihilators":2,
//  "coefficient":"2p+1"}, ...]}
nlohmann::json to_json(const PolyNormalForm& nf, const std::string& word,
                       const std::string& model);
nlohmann::json to_json(const NormalForm& nf, const std::string& word);

} // namespace bno
