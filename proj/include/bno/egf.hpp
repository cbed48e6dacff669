#pragma once

#include "bno/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bno {

// Exact polynomial in p and y with rational coefficients; the coefficient
// ring of the truncated generating-function series.
class BivariateCoeff {
public:
    // Exponent pair (power of p, power of y).
    using Key = std::pair<int, int>;

    BivariateCoeff() = default;
    BivariateCoeff(Rat constant) {
        if (constant != 0) terms_.emplace(Key{0, 0}, std::move(constant));
    }
    BivariateCoeff(long constant) : BivariateCoeff(Rat(constant)) {}

    static BivariateCoeff monomial(int p_exp, int y_exp, Rat coeff = Rat(1)) {
        BivariateCoeff out;
        if (coeff != 0) out.terms_.emplace(Key{p_exp, y_exp}, std::move(coeff));
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rat>& terms() const { return terms_; }

    void add_term(int p_exp, int y_exp, const Rat& coeff);

    // Coefficient of y^k, as a polynomial in p.
    PolyQ y_slice(int k) const;
    // Requires no y dependence.
    PolyQ as_poly_in_p() const;

    BivariateCoeff& operator+=(const BivariateCoeff& rhs);
    BivariateCoeff& operator-=(const BivariateCoeff& rhs);
    friend BivariateCoeff operator+(BivariateCoeff a, const BivariateCoeff& b) { return a += b; }
    friend BivariateCoeff operator-(BivariateCoeff a, const BivariateCoeff& b) { return a -= b; }
    friend BivariateCoeff operator*(const BivariateCoeff& a, const BivariateCoeff& b);
    BivariateCoeff operator*(const Rat& s) const;

    bool operator==(const BivariateCoeff&) const = default;

private:
    std::map<Key, Rat> terms_;
};

std::string render(const BivariateCoeff& c);

// Sum of c_n x^n for n <= order; ordinary coefficients, the n! of the EGF
// normalization is applied at extraction.
struct TruncatedSeries {
    int order = 0;
    std::vector<BivariateCoeff> coeffs; // size order+1

    explicit TruncatedSeries(int ord = 0) : order(ord), coeffs(static_cast<std::size_t>(ord) + 1) {}

    bool operator==(const TruncatedSeries&) const = default;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// Requires a zero constant term.
TruncatedSeries series_exp(const TruncatedSeries& a);
// c_n x^n -> c_n x^{n+1}/(n+1), truncated back to the same order.
TruncatedSeries series_integrate(const TruncatedSeries& a);
// Formal d/dx, shifted down; the top coefficient becomes zero.
TruncatedSeries series_differentiate(const TruncatedSeries& a);

// exp(s·x) truncated at `order` where s is any coefficient (e.g. p).
TruncatedSeries series_exp_of(const BivariateCoeff& s, int order);

// S_p(x;k) = ∫₀ˣ e^{pt} (e^t−1)^{k−1}/(k−1)! dt.
TruncatedSeries egf_Spk(int k, int order);

// S_p(x,y) = ∫₀ˣ y e^{pt} e^{y(e^t−1)} dt.
TruncatedSeries egf_Sxy(int order);

// n!·[x^n], optionally restricted to the y^k slice (with y stripped).
BivariateCoeff extract_egf_coefficient(const TruncatedSeries& s, int n,
                                       std::optional<int> k = std::nullopt);

} // namespace bno
