#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace bno {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial in p with exact integer coefficients.
// Trailing zeros are always trimmed; the zero polynomial has no coefficients.
class PolyP {
public:
    PolyP() = default;
    PolyP(Int constant) { // implicit on purpose: integers embed as constants
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    PolyP(long constant) : PolyP(Int(constant)) {}
    explicit PolyP(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static PolyP variable() { return PolyP(std::vector<Int>{0, 1}); }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int coefficient(std::size_t power) const {
        return power < coeffs_.size() ? coeffs_[power] : Int(0);
    }
    const std::vector<Int>& coefficients() const { return coeffs_; }

    Int evaluate(const Int& p) const;

    PolyP& operator+=(const PolyP& rhs);
    PolyP& operator-=(const PolyP& rhs);
    friend PolyP operator+(PolyP a, const PolyP& b) { return a += b; }
    friend PolyP operator-(PolyP a, const PolyP& b) { return a -= b; }
    friend PolyP operator*(const PolyP& a, const PolyP& b);

    bool operator==(const PolyP&) const = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

// Rendering like "3p^2+3p+1"; the zero polynomial renders as "0".
std::string render(const PolyP& poly, const std::string& var = "p");

// Same shape over exact rationals; the scalar Value type for weight
// specialization (integers and rationals are degree-0 instances).
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(Rat constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    PolyQ(const Int& constant) : PolyQ(Rat(constant)) {}
    PolyQ(long constant) : PolyQ(Rat(constant)) {}
    explicit PolyQ(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    explicit PolyQ(const PolyP& p);

    static PolyQ variable() { return PolyQ(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coefficient(std::size_t power) const {
        return power < coeffs_.size() ? coeffs_[power] : Rat(0);
    }
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    Rat evaluate(const Rat& p) const;

    // Conversion back to integer coefficients; throws domain_error if any
    // coefficient is non-integral.
    PolyP to_integer_poly() const;

    PolyQ& operator+=(const PolyQ& rhs);
    PolyQ& operator-=(const PolyQ& rhs);
    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);

    bool operator==(const PolyQ&) const = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

std::string render(const PolyQ& poly, const std::string& var = "p");

} // namespace bno
