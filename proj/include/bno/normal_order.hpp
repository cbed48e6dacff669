#pragma once

#include "bno/contraction.hpp"
#include "bno/poly.hpp"
#include "bno/weight.hpp"
#include "bno/word.hpp"

#include <map>
#include <string>

namespace bno {

// (creator-power v, annihilator-power u) of a normally ordered monomial.
struct TermKey {
    std::size_t creators = 0;
    std::size_t annihilators = 0;

    bool operator==(const TermKey&) const = default;
    auto operator<=>(const TermKey&) const = default;
};

// Normal forms are rendered highest creator-power first, like the worked
// expansions; the map comparator encodes that order.
struct TermKeyDescending {
    bool operator()(const TermKey& a, const TermKey& b) const { return b < a; }
};

// Fully symbolic ω-generalized normal form.
struct NormalForm {
    std::map<TermKey, WeightPolynomial, TermKeyDescending> terms;

    bool operator==(const NormalForm&) const = default;
};

// Normal form with polynomial-in-p coefficients (N_p; N at degree 0).
struct PolyNormalForm {
    std::map<TermKey, PolyP, TermKeyDescending> terms;

    bool operator==(const PolyNormalForm&) const = default;
};

NormalForm normal_order_omega(const Word& w, long long guard = kDefaultGuard);
PolyNormalForm normal_order_p(const Word& w, long long guard = kDefaultGuard);
PolyNormalForm normal_order_standard(const Word& w, long long guard = kDefaultGuard);

// N_p((a†a)^n) from the S_p recurrence, no contraction enumeration.
PolyNormalForm normal_order_number_power_p(int n);

// Coefficient-wise specialization of an ω normal form.
PolyNormalForm specialize(const NormalForm& nf, const WeightSequence& seq);

// Renders e.g. "(a†)^2a^2" / "(a†)^3a^3+(2p+1)(a†)^2a^2+p^2a†a".
std::string render_term_key(const TermKey& key);
std::string render(const NormalForm& nf);
std::string render(const PolyNormalForm& nf);

} // namespace bno
