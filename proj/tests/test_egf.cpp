#include "bno/egf.hpp"
#include "bno/errors.hpp"
#include "bno/stirling.hpp"

#include <doctest.h>

using namespace bno;

TEST_CASE("series basics") {
    TruncatedSeries ex = series_exp_of(BivariateCoeff(Rat(1)), 4);
    CHECK(ex.coeffs[0] == BivariateCoeff(Rat(1)));
    CHECK(ex.coeffs[1] == BivariateCoeff(Rat(1)));
    CHECK(ex.coeffs[2] == BivariateCoeff(Rat(1, 2)));
    CHECK(ex.coeffs[3] == BivariateCoeff(Rat(1, 6)));
    CHECK(ex.coeffs[4] == BivariateCoeff(Rat(1, 24)));

    TruncatedSeries one(4);
    one.coeffs[0] = BivariateCoeff(Rat(1));
    TruncatedSeries x = series_integrate(one);
    CHECK(x.coeffs[0].is_zero());
    CHECK(x.coeffs[1] == BivariateCoeff(Rat(1)));

    // exp(x)·exp(−x) = 1 up to the truncation order
    TruncatedSeries ex_neg = series_exp_of(BivariateCoeff(Rat(-1)), 4);
    TruncatedSeries product = series_mul(ex, ex_neg);
    CHECK(product.coeffs[0] == BivariateCoeff(Rat(1)));
    for (int n = 1; n <= 4; ++n) CHECK(product.coeffs[n].is_zero());
}

TEST_CASE("series preconditions") {
    TruncatedSeries with_constant(3);
    with_constant.coeffs[0] = BivariateCoeff(Rat(2));
    CHECK_THROWS_AS(series_exp(with_constant), domain_error);
    TruncatedSeries a(3), b(4);
    CHECK_THROWS_AS(series_mul(a, b), domain_error);
}

TEST_CASE("integrate then differentiate is the identity") {
    TruncatedSeries s = egf_Sxy(6);
    TruncatedSeries back = series_differentiate(series_integrate(s));
    // identity on the first `order` coefficients
    for (int n = 0; n < 6; ++n) CHECK(back.coeffs[n] == s.coeffs[n]);
}

TEST_CASE("single-column generating function") {
    TruncatedSeries k1 = egf_Spk(1, 6);
    for (int n = 1; n <= 6; ++n) {
        // n!·[x^n] = p^{n-1}
        PolyQ got = extract_egf_coefficient(k1, n).as_poly_in_p();
        PolyQ expected(PolyP(stirling_p_rec(n, 1)));
        CHECK(got == expected);
    }
    PolyQ n3k2 = extract_egf_coefficient(egf_Spk(2, 5), 3).as_poly_in_p();
    CHECK(n3k2 == PolyQ(std::vector<Rat>{Rat(1), Rat(2)})); // 2p+1
    PolyQ n4k2 = extract_egf_coefficient(egf_Spk(2, 5), 4).as_poly_in_p();
    CHECK(n4k2 == PolyQ(std::vector<Rat>{Rat(1), Rat(3), Rat(3)})); // 3p^2+3p+1
    CHECK_THROWS_AS(egf_Spk(0, 4), domain_error);
    CHECK_THROWS_AS(egf_Spk(5, 4), domain_error);
}

TEST_CASE("column functions match the recurrence") {
    for (int k = 1; k <= 10; ++k) {
        TruncatedSeries s = egf_Spk(k, 10);
        for (int n = k; n <= 10; ++n)
            CHECK(extract_egf_coefficient(s, n).as_poly_in_p() == PolyQ(stirling_p_rec(n, k)));
    }
}

TEST_CASE("bivariate generating function matches the recurrence") {
    TruncatedSeries s = egf_Sxy(10);
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) {
            PolyQ got = extract_egf_coefficient(s, n, k).as_poly_in_p();
            CHECK(got == PolyQ(stirling_p_rec(n, k)));
            CHECK(got.evaluate(1) == Rat(stirling2(n, k)));
        }
    // diagonal coefficients are 1
    for (int n = 1; n <= 10; ++n)
        CHECK(extract_egf_coefficient(s, n, n).as_poly_in_p() == PolyQ(1));
    CHECK_THROWS_AS(extract_egf_coefficient(s, 11), domain_error);
}

TEST_CASE("order-zero extraction") {
    TruncatedSeries one(0);
    one.coeffs[0] = BivariateCoeff(Rat(1));
    CHECK(extract_egf_coefficient(one, 0) == BivariateCoeff(Rat(1)));
}
