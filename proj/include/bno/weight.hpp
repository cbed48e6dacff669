#pragma once

#include "bno/contraction.hpp"
#include "bno/poly.hpp"

#include <map>
#include <string>

namespace bno {

// Weight symbols are indexed by an int: -1 is the crossing weight ω₋₁,
// d >= 1 the distance-d contraction weight ω_d. ω₀ is the implicit unit
// and never stored.
using WeightSymbol = int;
inline constexpr WeightSymbol kCrossing = -1;

// Product of weight symbols; empty map = the unit monomial (weight of the
// null contraction). Exponents are always positive.
struct WeightMonomial {
    std::map<WeightSymbol, int> exponents;

    int total_degree() const {
        int d = 0;
        for (auto& [sym, e] : exponents) d += e;
        return d;
    }

    WeightMonomial& operator*=(const WeightMonomial& rhs);
    friend WeightMonomial operator*(WeightMonomial a, const WeightMonomial& b) { return a *= b; }

    bool operator==(const WeightMonomial&) const = default;
};

// Canonical term order: total degree first, then lexicographic on the
// (symbol, exponent) sequence with Crossing before Distance(1) < Distance(2)…
struct MonomialOrder {
    bool operator()(const WeightMonomial& a, const WeightMonomial& b) const;
};

// Exact polynomial in the weight symbols with integer coefficients.
class WeightPolynomial {
public:
    WeightPolynomial() = default;
    WeightPolynomial(Int constant) {
        if (constant != 0) terms_.emplace(WeightMonomial{}, std::move(constant));
    }
    WeightPolynomial(long constant) : WeightPolynomial(Int(constant)) {}
    explicit WeightPolynomial(const WeightMonomial& m, Int coeff = 1) {
        if (coeff != 0) terms_.emplace(m, std::move(coeff));
    }

    static WeightPolynomial symbol(WeightSymbol s, int exponent = 1) {
        WeightMonomial m;
        m.exponents[s] = exponent;
        return WeightPolynomial(m);
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<WeightMonomial, Int, MonomialOrder>& terms() const { return terms_; }

    void add_term(const WeightMonomial& m, const Int& coeff);

    WeightPolynomial& operator+=(const WeightPolynomial& rhs);
    WeightPolynomial& operator-=(const WeightPolynomial& rhs);
    friend WeightPolynomial operator+(WeightPolynomial a, const WeightPolynomial& b) {
        return a += b;
    }
    friend WeightPolynomial operator-(WeightPolynomial a, const WeightPolynomial& b) {
        return a -= b;
    }
    friend WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b);

    bool operator==(const WeightPolynomial&) const = default;

private:
    std::map<WeightMonomial, Int, MonomialOrder> terms_;
};

// Rendering: "w-1" for ω₋₁, "w3" for ω₃; e.g. "2w1+w3", "w-1*w3^2".
std::string render(const WeightMonomial& m);
std::string render(const WeightPolynomial& poly);

// An assignment of exact Values to every weight symbol: a crossing value
// plus distance values given by finitely many overrides over a default.
struct WeightSequence {
    PolyQ crossing;
    PolyQ default_distance;
    std::map<int, PolyQ> distance_overrides;

    const PolyQ& distance(int d) const {
        auto it = distance_overrides.find(d);
        return it != distance_overrides.end() ? it->second : default_distance;
    }
};

enum class SequenceName { Unit, P, Noncrossing };

// unit: every value 1 (standard normal ordering);
// p: crossing 1, distance-1 value the polynomial p, other distances 1;
// noncrossing: crossing 0, every distance 1.
WeightSequence predefined_sequence(SequenceName name);
WeightSequence predefined_sequence(const std::string& name); // throws on unknown name

PolyQ specialize(const WeightMonomial& m, const WeightSequence& seq);
PolyQ specialize(const WeightPolynomial& poly, const WeightSequence& seq);

// ω₋₁^{X(c)} · Π over edges of ω_{distance}: the weight of a contraction.
WeightMonomial contraction_weight_monomial(const Contraction& c);

} // namespace bno
