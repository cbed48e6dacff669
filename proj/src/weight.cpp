#include "bno/weight.hpp"

#include "bno/errors.hpp"

namespace bno {

WeightMonomial& WeightMonomial::operator*=(const WeightMonomial& rhs) {
    for (auto& [sym, e] : rhs.exponents) exponents[sym] += e;
    return *this;
}

bool MonomialOrder::operator()(const WeightMonomial& a, const WeightMonomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exponents < b.exponents;
}

void WeightPolynomial::add_term(const WeightMonomial& m, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& rhs) {
    for (auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

WeightPolynomial& WeightPolynomial::operator-=(const WeightPolynomial& rhs) {
    for (auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b) {
    WeightPolynomial out;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

std::string render(const WeightMonomial& m) {
    if (m.exponents.empty()) return "1";
    std::string out;
    for (auto& [sym, e] : m.exponents) {
        if (!out.empty()) out += "*";
        out += "w" + std::to_string(sym);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string render(const WeightPolynomial& poly) {
    if (poly.is_zero()) return "0";
    std::string out;
    for (auto& [m, c] : poly.terms()) {
        bool negative = c < 0;
        if (!out.empty()) out += negative ? "-" : "+";
        else if (negative) out += "-";
        Int abs_c = negative ? Int(-c) : c;
        if (m.exponents.empty()) {
            out += abs_c.get_str();
        } else {
            if (abs_c != 1) out += abs_c.get_str();
            out += render(m);
        }
    }
    return out;
}

WeightSequence predefined_sequence(SequenceName name) {
    switch (name) {
    case SequenceName::Unit: return {PolyQ(1), PolyQ(1), {}};
    case SequenceName::P: return {PolyQ(1), PolyQ(1), {{1, PolyQ::variable()}}};
    case SequenceName::Noncrossing: return {PolyQ(0), PolyQ(1), {}};
    }
    throw domain_error("unknown weight sequence");
}

WeightSequence predefined_sequence(const std::string& name) {
    if (name == "unit") return predefined_sequence(SequenceName::Unit);
    if (name == "p") return predefined_sequence(SequenceName::P);
    if (name == "noncrossing") return predefined_sequence(SequenceName::Noncrossing);
    throw domain_error("unknown weight sequence '" + name + "'");
}

PolyQ specialize(const WeightMonomial& m, const WeightSequence& seq) {
    PolyQ out(1);
    for (auto& [sym, e] : m.exponents) {
        const PolyQ& base = (sym == kCrossing) ? seq.crossing : seq.distance(sym);
        for (int i = 0; i < e; ++i) out = out * base;
    }
    return out;
}

PolyQ specialize(const WeightPolynomial& poly, const WeightSequence& seq) {
    PolyQ out;
    for (auto& [m, c] : poly.terms()) out += PolyQ(Rat(c)) * specialize(m, seq);
    return out;
}

WeightMonomial contraction_weight_monomial(const Contraction& c) {
    WeightMonomial m;
    std::size_t x = crossing_number(c);
    if (x > 0) m.exponents[kCrossing] = static_cast<int>(x);
    for (const Edge& e : c.edges) m.exponents[e.distance()] += 1;
    return m;
}

} // namespace bno
