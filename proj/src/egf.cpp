#include "bno/egf.hpp"

#include "bno/errors.hpp"

namespace bno {

void BivariateCoeff::add_term(int p_exp, int y_exp, const Rat& coeff) {
    if (coeff == 0) return;
    Key key{p_exp, y_exp};
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

PolyQ BivariateCoeff::y_slice(int k) const {
    std::vector<Rat> coeffs;
    for (auto& [key, c] : terms_) {
        if (key.second != k) continue;
        if (coeffs.size() <= static_cast<std::size_t>(key.first))
            coeffs.resize(static_cast<std::size_t>(key.first) + 1, Rat(0));
        coeffs[static_cast<std::size_t>(key.first)] = c;
    }
    return PolyQ(std::move(coeffs));
}

PolyQ BivariateCoeff::as_poly_in_p() const {
    for (auto& [key, c] : terms_)
        if (key.second != 0) throw domain_error("coefficient depends on y");
    return y_slice(0);
}

BivariateCoeff& BivariateCoeff::operator+=(const BivariateCoeff& rhs) {
    for (auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
    return *this;
}

BivariateCoeff& BivariateCoeff::operator-=(const BivariateCoeff& rhs) {
    for (auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
    return *this;
}

BivariateCoeff operator*(const BivariateCoeff& a, const BivariateCoeff& b) {
    BivariateCoeff out;
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BivariateCoeff BivariateCoeff::operator*(const Rat& s) const {
    BivariateCoeff out;
    if (s == 0) return out;
    for (auto& [key, c] : terms_) out.terms_.emplace(key, c * s);
    return out;
}

std::string render(const BivariateCoeff& c) {
    if (c.is_zero()) return "0";
    std::string out;
    for (auto& [key, v] : c.terms()) {
        bool negative = v < 0;
        if (!out.empty()) out += negative ? "-" : "+";
        else if (negative) out += "-";
        Rat a = negative ? Rat(-v) : v;
        std::string term;
        std::string cs = a.get_str();
        bool has_var = key.first > 0 || key.second > 0;
        if (!has_var || cs != "1") term += cs;
        if (key.first > 0) term += "p" + (key.first > 1 ? "^" + std::to_string(key.first) : "");
        if (key.second > 0) term += "y" + (key.second > 1 ? "^" + std::to_string(key.second) : "");
        out += term;
    }
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order != b.order) throw domain_error("series order mismatch");
    TruncatedSeries out(a.order);
    for (int i = 0; i <= a.order; ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (int j = 0; i + j <= a.order; ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (!a.coeffs[0].is_zero()) throw domain_error("series_exp requires zero constant term");
    // f' = a'·f degree by degree: n f_n = sum_{j=1..n} j a_j f_{n-j}.
    TruncatedSeries out(a.order);
    out.coeffs[0] = BivariateCoeff(Rat(1));
    for (int n = 1; n <= a.order; ++n) {
        BivariateCoeff acc;
        for (int j = 1; j <= n; ++j) acc += a.coeffs[j] * Rat(j) * out.coeffs[n - j];
        out.coeffs[n] = acc * Rat(1, static_cast<unsigned long>(n));
    }
    return out;
}

TruncatedSeries series_integrate(const TruncatedSeries& a) {
    TruncatedSeries out(a.order);
    for (int n = 0; n < a.order; ++n)
        out.coeffs[n + 1] = a.coeffs[n] * Rat(1, static_cast<unsigned long>(n + 1));
    return out;
}

TruncatedSeries series_differentiate(const TruncatedSeries& a) {
    TruncatedSeries out(a.order);
    for (int n = 1; n <= a.order; ++n) out.coeffs[n - 1] = a.coeffs[n] * Rat(n);
    return out;
}

TruncatedSeries series_exp_of(const BivariateCoeff& s, int order) {
    TruncatedSeries arg(order);
    if (order >= 1) arg.coeffs[1] = s;
    return series_exp(arg);
}

namespace {

// e^t − 1 as an ordinary-coefficient series.
TruncatedSeries exp_minus_one(int order) {
    TruncatedSeries out(order);
    Rat factorial(1);
    for (int n = 1; n <= order; ++n) {
        factorial /= n;
        out.coeffs[n] = BivariateCoeff(factorial);
    }
    return out;
}

} // namespace

TruncatedSeries egf_Spk(int k, int order) {
    if (k < 1) throw domain_error("egf_Spk requires k >= 1");
    if (order < k) throw domain_error("egf_Spk requires order >= k");
    TruncatedSeries integrand = series_exp_of(BivariateCoeff::monomial(1, 0), order);
    TruncatedSeries em1 = exp_minus_one(order);
    Rat factorial(1);
    for (int i = 1; i <= k - 1; ++i) {
        integrand = series_mul(integrand, em1);
        factorial *= i;
    }
    for (auto& c : integrand.coeffs) c = c * (Rat(1) / factorial);
    return series_integrate(integrand);
}

TruncatedSeries egf_Sxy(int order) {
    if (order < 1) throw domain_error("egf_Sxy requires order >= 1");
    TruncatedSeries em1 = exp_minus_one(order);
    // y·(e^t − 1)
    BivariateCoeff y = BivariateCoeff::monomial(0, 1);
    TruncatedSeries scaled(order);
    for (int n = 0; n <= order; ++n) scaled.coeffs[n] = em1.coeffs[n] * y;
    TruncatedSeries integrand = series_mul(series_exp_of(BivariateCoeff::monomial(1, 0), order),
                                           series_exp(scaled));
    for (auto& c : integrand.coeffs) c = c * y;
    return series_integrate(integrand);
}

BivariateCoeff extract_egf_coefficient(const TruncatedSeries& s, int n, std::optional<int> k) {
    if (n < 0 || n > s.order) throw domain_error("coefficient index exceeds series order");
    Rat factorial(1);
    for (int i = 2; i <= n; ++i) factorial *= i;
    BivariateCoeff out = s.coeffs[n] * factorial;
    if (!k) return out;
    PolyQ slice = out.y_slice(*k);
    BivariateCoeff restricted;
    for (std::size_t i = 0; i < slice.coefficients().size(); ++i)
        restricted.add_term(static_cast<int>(i), 0, slice.coefficients()[i]);
    return restricted;
}

} // namespace bno
