#include "bno/errors.hpp"
#include "bno/stirling.hpp"
#include "bno/word.hpp"

#include <doctest.h>

using namespace bno;

namespace {

WeightPolynomial sym(int s, int e = 1) { return WeightPolynomial::symbol(s, e); }

} // namespace

TEST_CASE("classical Stirling numbers") {
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(2, 5) == 0);
    for (int n = 1; n <= 10; ++n) CHECK(stirling2(n, n) == 1);
    // recurrence spot check: S(n+1,k) = k S(n,k) + S(n,k-1)
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(stirling2(n + 1, k) == Int(k) * stirling2(n, k) + stirling2(n, k - 1));
}

TEST_CASE("Bell numbers and polynomials") {
    CHECK(bell_number(1) == 1);
    CHECK(bell_number(3) == 5);
    CHECK(bell_number(4) == 15);
    CHECK(bell_number(10) == 115975);
    CHECK_THROWS_AS(bell_number(0), domain_error);

    // B(3,x) = x + 3x^2 + x^3
    CHECK(bell_polynomial(3, PolyQ::variable()) ==
          PolyQ(std::vector<Rat>{Rat(0), Rat(1), Rat(3), Rat(1)}));
    CHECK(bell_polynomial(3, PolyQ(1)) == PolyQ(5));
}

TEST_CASE("p-generalized Stirling recurrence") {
    CHECK(stirling_p_rec(3, 2) == PolyP(std::vector<Int>{1, 2}));          // 2p+1
    CHECK(stirling_p_rec(4, 2) == PolyP(std::vector<Int>{1, 3, 3}));       // 3p^2+3p+1
    CHECK(stirling_p_rec(1, 1) == PolyP(1));
    CHECK(stirling_p_rec(3, 5).is_zero());
    CHECK(stirling_p_rec(4, 0).is_zero());
    for (int n = 1; n <= 8; ++n) {
        PolyP expected(1);
        for (int i = 0; i < n - 1; ++i) expected = expected * PolyP::variable();
        CHECK(stirling_p_rec(n, 1) == expected); // p^{n-1}
    }
}

TEST_CASE("d'Ocagne formula agrees with the recurrence") {
    CHECK(stirling_p_docagne(2, 1) == PolyP::variable());
    CHECK(stirling_p_docagne(3, 2) == PolyP(std::vector<Int>{1, 2}));
    CHECK(stirling_p_docagne(4, 2) == PolyP(std::vector<Int>{1, 3, 3}));
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) CHECK(stirling_p_docagne(n, k) == stirling_p_rec(n, k));
    CHECK_THROWS_AS(stirling_p_docagne(2, 3), domain_error);
}

TEST_CASE("triple-indexed rise counts") {
    CHECK(stirling_knm(3, 2, 1) == 2); // {12}{3} and {1}{23}
    CHECK(stirling_knm(4, 2, 0) == 1); // only {13}{24}
    CHECK(stirling_knm(3, 2, 5) == 0);
    for (int n = 1; n <= 8; ++n) CHECK(stirling_knm(n, n, 0) == 1);
    // marginals: sum over m recovers the classical triangle
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            Int sum = 0;
            for (int m = 0; m <= n - k; ++m) sum += stirling_knm(n, k, m);
            CHECK(sum == stirling2(n, k));
        }
}

TEST_CASE("p-polynomial coefficients are the rise counts") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            PolyP poly = stirling_p_rec(n, k);
            CHECK(poly.degree() == n - k);
            for (int m = 0; m <= n - k; ++m) {
                CHECK(poly.coefficient(static_cast<std::size_t>(m)) == stirling_knm(n, k, m));
                CHECK(poly.coefficient(static_cast<std::size_t>(m)) >= 0);
            }
        }
}

TEST_CASE("p=1 and p=0 collapses") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(stirling_p_rec(n, k).evaluate(1) == stirling2(n, k));
    for (int n = 2; n <= 10; ++n) {
        Int sum = 0;
        for (int k = 1; k <= n; ++k) sum += stirling_p_rec(n, k).evaluate(0);
        CHECK(sum == bell_number(n - 1));
    }
}

TEST_CASE("omega-generalized Stirling numbers") {
    CHECK(stirling_omega(3, 2) == WeightPolynomial(2) * sym(1) + sym(3));
    for (int n = 1; n <= 8; ++n) {
        CHECK(stirling_omega(n, n) == WeightPolynomial(1));
        WeightPolynomial chain(1);
        for (int i = 0; i < n - 1; ++i) chain = chain * sym(1);
        CHECK(stirling_omega(n, 1) == chain);
    }
    CHECK_THROWS_AS(stirling_omega(3, 0), domain_error);

    WeightSequence seq_p = predefined_sequence(SequenceName::P);
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(specialize(stirling_omega(n, k), seq_p).to_integer_poly() ==
                  stirling_p_rec(n, k));
}

TEST_CASE("noncrossing specialization is bounded by the classical triangle") {
    WeightSequence nc = predefined_sequence(SequenceName::Noncrossing);
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            PolyQ value = specialize(stirling_omega(n, k), nc);
            REQUIRE(value.degree() <= 0);
            CHECK(value.coefficient(0) <= Rat(stirling2(n, k)));
        }
}

TEST_CASE("omega Bell numbers") {
    CHECK(bell_omega(1) == WeightPolynomial(1));
    CHECK(bell_omega(2) == WeightPolynomial(1) + sym(1));
    CHECK(specialize(bell_omega(3), predefined_sequence(SequenceName::Unit)) == PolyQ(5));
    for (int n = 1; n <= 7; ++n) {
        WeightPolynomial row_sum;
        for (int k = 1; k <= n; ++k) row_sum += stirling_omega(n, k);
        CHECK(bell_omega(n) == row_sum);
    }
}
