#include "bno/errors.hpp"
#include "bno/normal_order.hpp"
#include "bno/stirling.hpp"
#include "bno/word.hpp"

#include <doctest.h>

#include <random>

using namespace bno;

namespace {

WeightPolynomial sym(int s, int e = 1) { return WeightPolynomial::symbol(s, e); }

} // namespace

TEST_CASE("omega ordering of the number-operator squares and cubes") {
    NormalForm n2 = normal_order_omega(number_operator_word(2));
    REQUIRE(n2.terms.size() == 2);
    CHECK(n2.terms.at({2, 2}) == WeightPolynomial(1));
    CHECK(n2.terms.at({1, 1}) == sym(1));

    NormalForm n3 = normal_order_omega(number_operator_word(3));
    REQUIRE(n3.terms.size() == 3);
    CHECK(n3.terms.at({3, 3}) == WeightPolynomial(1));
    CHECK(n3.terms.at({2, 2}) == WeightPolynomial(2) * sym(1) + sym(3));
    CHECK(n3.terms.at({1, 1}) == sym(1, 2));
}

TEST_CASE("omega ordering of the fourth power, coefficient of (a†)^2a^2") {
    // Direct enumeration over the seven two-edge sets; the bracketed value
    // must specialize to S(4,2) = 7 and S_p(4,2) = 3p^2+3p+1.
    NormalForm n4 = normal_order_omega(number_operator_word(4));
    WeightPolynomial expected = WeightPolynomial(3) * sym(1, 2) +
                                WeightPolynomial(2) * sym(1) * sym(3) +
                                sym(kCrossing) * sym(3, 2) + sym(1) * sym(5);
    CHECK(n4.terms.at({2, 2}) == expected);
    CHECK(specialize(expected, predefined_sequence(SequenceName::Unit)) == PolyQ(7));
    CHECK(specialize(expected, predefined_sequence(SequenceName::P)) == PolyQ(stirling_p_rec(4, 2)));
    // k=3 coefficient: 3w1 + 2w3 + w5
    CHECK(n4.terms.at({3, 3}) ==
          WeightPolynomial(3) * sym(1) + WeightPolynomial(2) * sym(3) + sym(5));
    CHECK(n4.terms.at({1, 1}) == sym(1, 3));
}

TEST_CASE("p ordering worked examples") {
    PolyNormalForm ad = normal_order_p(parse_word("ad"));
    REQUIRE(ad.terms.size() == 2);
    CHECK(ad.terms.at({1, 1}) == PolyP(1));
    CHECK(ad.terms.at({0, 0}) == PolyP::variable());

    PolyNormalForm da3 = normal_order_p(number_operator_word(3));
    CHECK(da3.terms.at({3, 3}) == PolyP(1));
    CHECK(da3.terms.at({2, 2}) == PolyP(std::vector<Int>{1, 2}));
    CHECK(da3.terms.at({1, 1}) == PolyP(std::vector<Int>{0, 0, 1}));
    CHECK(render(da3) == "(a†)^3a^3+(2p+1)(a†)^2a^2+p^2a†a");

    PolyNormalForm da = normal_order_p(parse_word("da"));
    REQUIRE(da.terms.size() == 1);
    CHECK(da.terms.at({1, 1}) == PolyP(1));
}

TEST_CASE("standard ordering of b b† b b b† b b") {
    PolyNormalForm nf = normal_order_standard(parse_word("adaadaa"));
    REQUIRE(nf.terms.size() == 3);
    CHECK(nf.terms.at({2, 5}) == PolyP(1));
    CHECK(nf.terms.at({1, 4}) == PolyP(4));
    CHECK(nf.terms.at({0, 3}) == PolyP(2));
}

TEST_CASE("standard ordering of number-operator powers gives Stirling rows") {
    for (int n = 1; n <= 7; ++n) {
        PolyNormalForm nf = normal_order_standard(number_operator_word(n));
        for (int k = 1; k <= n; ++k)
            CHECK(nf.terms.at({static_cast<std::size_t>(k), static_cast<std::size_t>(k)}) ==
                  PolyP(stirling2(n, k)));
    }
    PolyNormalForm single = normal_order_standard(parse_word("a"));
    REQUIRE(single.terms.size() == 1);
    CHECK(single.terms.at({0, 1}) == PolyP(1));
}

TEST_CASE("recurrence route equals enumeration for number-operator powers") {
    CHECK_THROWS_AS(normal_order_number_power_p(0), domain_error);
    PolyNormalForm n1 = normal_order_number_power_p(1);
    REQUIRE(n1.terms.size() == 1);
    CHECK(n1.terms.at({1, 1}) == PolyP(1));
    CHECK(normal_order_number_power_p(4).terms.at({2, 2}) == PolyP(std::vector<Int>{1, 3, 3}));
    for (int n = 1; n <= 8; ++n)
        CHECK(normal_order_number_power_p(n) == normal_order_p(number_operator_word(n)));
}

TEST_CASE("route identities on random words") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> len(0, 9);
    std::uniform_int_distribution<int> bit(0, 1);
    WeightSequence seq_p = predefined_sequence(SequenceName::P);
    WeightSequence seq_unit = predefined_sequence(SequenceName::Unit);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Letter> letters(len(rng));
        for (Letter& l : letters) l = bit(rng) ? Letter::Creator : Letter::Annihilator;
        Word w(letters);
        NormalForm omega = normal_order_omega(w);
        PolyNormalForm p_form = normal_order_p(w);
        CHECK(specialize(omega, seq_p) == p_form);

        PolyNormalForm collapsed;
        for (auto& [key, poly] : p_form.terms) {
            Int v = poly.evaluate(1);
            if (v != 0) collapsed.terms.emplace(key, PolyP(v));
        }
        CHECK(collapsed == normal_order_standard(w));

        // the null-contraction bucket always carries the unit coefficient
        auto [n_a, n_c] = word_counts(w);
        CHECK(omega.terms.at({n_c, n_a}) == WeightPolynomial(1));

        // balanced words at the unit sequence: coefficients sum to the count
        if (n_a == n_c) {
            Int total = 0;
            for (auto& [key, poly] : omega.terms) {
                PolyQ value = specialize(poly, seq_unit);
                REQUIRE(value.degree() <= 0);
                Int coeff = value.is_zero() ? Int(0) : value.coefficient(0).get_num();
                CHECK(coeff > 0);
                total += coeff;
            }
            CHECK(total == count_contractions(w));
        }
    }
}

TEST_CASE("normal form keys follow the host word counts") {
    Word w = parse_word("addad");
    auto [n_a, n_c] = word_counts(w);
    for (auto& [key, poly] : normal_order_omega(w).terms) {
        std::size_t d = n_c - key.creators;
        CHECK(key.annihilators == n_a - d);
        CHECK(d <= std::min(n_a, n_c));
    }
}

TEST_CASE("capacity error propagates from the enumeration") {
    CHECK_THROWS_AS(normal_order_omega(number_operator_word(12), 1000), capacity_error);
}

TEST_CASE("rendering the omega normal form") {
    CHECK(render(normal_order_omega(number_operator_word(2))) ==
          "(a†)^2a^2+w1a†a");
    CHECK(render(PolyNormalForm{}) == "0");
}
