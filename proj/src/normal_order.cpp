#include "bno/normal_order.hpp"

#include "bno/errors.hpp"
#include "bno/stirling.hpp"

namespace bno {

NormalForm normal_order_omega(const Word& w, long long guard) {
    NormalForm nf;
    enumerate_contractions(
        w,
        [&](const Contraction& c) {
            DotMonomial dot = double_dot(contraction_word(w, c));
            TermKey key{dot.creators, dot.annihilators};
            nf.terms[key].add_term(contraction_weight_monomial(c), 1);
        },
        guard);
    return nf;
}

PolyNormalForm specialize(const NormalForm& nf, const WeightSequence& seq) {
    PolyNormalForm out;
    for (auto& [key, poly] : nf.terms) {
        PolyP value = specialize(poly, seq).to_integer_poly();
        if (!value.is_zero()) out.terms.emplace(key, std::move(value));
    }
    return out;
}

PolyNormalForm normal_order_p(const Word& w, long long guard) {
    return specialize(normal_order_omega(w, guard), predefined_sequence(SequenceName::P));
}

PolyNormalForm normal_order_standard(const Word& w, long long guard) {
    // Counted directly per bucket; the p = 1 evaluation of normal_order_p
    // must agree and is asserted as a separate verification route.
    std::map<TermKey, Int, TermKeyDescending> counts;
    enumerate_contractions(
        w,
        [&](const Contraction& c) {
            DotMonomial dot = double_dot(contraction_word(w, c));
            counts[TermKey{dot.creators, dot.annihilators}] += 1;
        },
        guard);
    PolyNormalForm out;
    for (auto& [key, value] : counts) out.terms.emplace(key, PolyP(value));
    return out;
}

PolyNormalForm normal_order_number_power_p(int n) {
    if (n < 1) throw domain_error("normal_order_number_power_p requires n >= 1");
    PolyNormalForm out;
    for (int k = 1; k <= n; ++k) {
        PolyP coeff = stirling_p_rec(n, k);
        if (!coeff.is_zero())
            out.terms.emplace(
                TermKey{static_cast<std::size_t>(k), static_cast<std::size_t>(k)},
                std::move(coeff));
    }
    return out;
}

std::string render_term_key(const TermKey& key) {
    std::string out;
    if (key.creators == 1) out += "a†";
    else if (key.creators > 1) out += "(a†)^" + std::to_string(key.creators);
    if (key.annihilators == 1) out += "a";
    else if (key.annihilators > 1) out += "a^" + std::to_string(key.annihilators);
    return out;
}

namespace {

template <typename Form, typename RenderCoeff>
std::string render_form(const Form& nf, RenderCoeff render_coeff, auto is_unit) {
    if (nf.terms.empty()) return "0";
    std::string out;
    for (auto& [key, coeff] : nf.terms) {
        if (!out.empty()) out += "+";
        std::string keystr = render_term_key(key);
        std::string cs = render_coeff(coeff);
        if (keystr.empty()) {
            out += cs;
            continue;
        }
        if (!is_unit(coeff)) {
            bool atomic = cs.find('+') == std::string::npos && cs.find('-') == std::string::npos;
            out += atomic ? cs : "(" + cs + ")";
        }
        out += keystr;
    }
    return out;
}

} // namespace

std::string render(const NormalForm& nf) {
    return render_form(
        nf, [](const WeightPolynomial& c) { return render(c); },
        [](const WeightPolynomial& c) { return c == WeightPolynomial(1); });
}

std::string render(const PolyNormalForm& nf) {
    return render_form(
        nf, [](const PolyP& c) { return render(c); },
        [](const PolyP& c) { return c == PolyP(1); });
}

} // namespace bno
