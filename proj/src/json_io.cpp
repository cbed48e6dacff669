#include "bno/json_io.hpp"

#include "bno/errors.hpp"

namespace bno {

nlohmann::json to_json(const WeightPolynomial& poly) {
    nlohmann::json monomials = nlohmann::json::array();
    for (auto& [m, c] : poly.terms()) {
        nlohmann::json exponents = nlohmann::json::object();
        for (auto& [sym, e] : m.exponents) exponents["w" + std::to_string(sym)] = e;
        monomials.push_back({{"exponents", exponents}, {"coeff", c.get_str()}});
    }
    return {{"monomials", monomials}};
}

WeightPolynomial weight_polynomial_from_json(const nlohmann::json& j) {
    WeightPolynomial out;
    for (auto& entry : j.at("monomials")) {
        WeightMonomial m;
        for (auto& [key, value] : entry.at("exponents").items()) {
            if (key.size() < 2 || key[0] != 'w')
                throw domain_error("bad weight symbol '" + key + "'");
            m.exponents[std::stoi(key.substr(1))] = value.get<int>();
        }
        out.add_term(m, Int(entry.at("coeff").get<std::string>()));
    }
    return out;
}

nlohmann::json to_json(const PolyNormalForm& nf, const std::string& word,
                       const std::string& model) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [key, coeff] : nf.terms)
        terms.push_back({{"creators", key.creators},
                         {"annihilators", key.annihilators},
                         {"coefficient", render(coeff)}});
    return {{"word", word}, {"model", model}, {"terms", terms}};
}

nlohmann::json to_json(const NormalForm& nf, const std::string& word) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [key, coeff] : nf.terms)
        terms.push_back({{"creators", key.creators},
                         {"annihilators", key.annihilators},
                         {"coefficient", render(coeff)},
                         {"coefficient_json", to_json(coeff)}});
    return {{"word", word}, {"model", "omega"}, {"terms", terms}};
}

} // namespace bno
