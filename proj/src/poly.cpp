#include "bno/poly.hpp"

#include "bno/errors.hpp"

namespace bno {

Int PolyP::evaluate(const Int& p) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * p + *it;
    return acc;
}

PolyP& PolyP::operator+=(const PolyP& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

PolyP& PolyP::operator-=(const PolyP& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

PolyP operator*(const PolyP& a, const PolyP& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolyP(std::move(out));
}

namespace {

template <typename Coeff>
std::string render_poly(const std::vector<Coeff>& coeffs, const std::string& var,
                        const std::string& (*to_str)(const Coeff&, std::string&)) {
    if (coeffs.empty()) return "0";
    std::string out;
    std::string buf;
    for (std::size_t idx = coeffs.size(); idx-- > 0;) {
        const Coeff& c = coeffs[idx];
        if (c == 0) continue;
        bool negative = c < 0;
        if (!out.empty()) out += negative ? "-" : "+";
        else if (negative) out += "-";
        Coeff abs_c = negative ? Coeff(-c) : c;
        const std::string& cs = to_str(abs_c, buf);
        if (idx == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs;
            out += var;
            if (idx > 1) out += "^" + std::to_string(idx);
        }
    }
    return out.empty() ? "0" : out;
}

const std::string& int_str(const Int& v, std::string& buf) {
    buf = v.get_str();
    return buf;
}

const std::string& rat_str(const Rat& v, std::string& buf) {
    buf = v.get_str();
    if (v.get_den() != 1) buf = "(" + buf + ")";
    return buf;
}

} // namespace

std::string render(const PolyP& poly, const std::string& var) {
    return render_poly<Int>(poly.coefficients(), var, int_str);
}

PolyQ::PolyQ(const PolyP& p) {
    coeffs_.reserve(p.coefficients().size());
    for (const Int& c : p.coefficients()) coeffs_.emplace_back(c);
    trim();
}

Rat PolyQ::evaluate(const Rat& p) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * p + *it;
    return acc;
}

PolyP PolyQ::to_integer_poly() const {
    std::vector<Int> out;
    out.reserve(coeffs_.size());
    for (const Rat& c : coeffs_) {
        if (c.get_den() != 1)
            throw domain_error("polynomial has non-integer coefficient " + c.get_str());
        out.push_back(c.get_num());
    }
    return PolyP(std::move(out));
}

PolyQ& PolyQ::operator+=(const PolyQ& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolyQ(std::move(out));
}

std::string render(const PolyQ& poly, const std::string& var) {
    return render_poly<Rat>(poly.coefficients(), var, rat_str);
}

} // namespace bno
