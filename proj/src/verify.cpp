#include "bno/verify.hpp"

#include "bno/contraction.hpp"
#include "bno/egf.hpp"
#include "bno/normal_order.hpp"
#include "bno/partitions.hpp"
#include "bno/poly.hpp"
#include "bno/stirling.hpp"
#include "bno/weight.hpp"
#include "bno/word.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace bno {

namespace {

WeightPolynomial sym(int s, int e = 1) { return WeightPolynomial::symbol(s, e); }

Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int out = 1;
    for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

// Generalized falling factorial x^(i): x(x-1)...(x-i+1) for i >= 0 and
// (x+1)(x+2)...(x+|i|) for i < 0, with x^(0) = 1.
Int falling(int x, int i) {
    Int out = 1;
    if (i >= 0)
        for (int j = 0; j < i; ++j) out *= (x - j);
    else
        for (int j = 1; j <= -i; ++j) out *= (x + j);
    return out;
}

// The published closed form for the p-ordering of a^v (a†)^u, kept as a
// negative control: it disagrees with contraction enumeration at (v,u)=(1,2).
PolyNormalForm closed_form_power_word(int v, int u) {
    PolyNormalForm out;
    for (int i = 0; i <= v; ++i) {
        PolyP coeff = PolyP(binomial(v, i) * (u - i)) +
                      (PolyP(v - 1) + PolyP::variable()) * PolyP(binomial(v - 1, i - 1));
        coeff = coeff * PolyP(falling(u - 1, i - 1));
        if (!coeff.is_zero())
            out.terms[TermKey{static_cast<std::size_t>(u - i), static_cast<std::size_t>(v - i)}] +=
                coeff;
    }
    return out;
}

PolyNormalForm power_form(std::initializer_list<std::pair<TermKey, PolyP>> terms) {
    PolyNormalForm out;
    for (auto& [key, coeff] : terms) out.terms.emplace(key, coeff);
    return out;
}

struct Suite {
    std::vector<CheckResult>& results;

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        results.push_back({name, pass, detail});
    }

    template <typename T>
    void check_eq(const std::string& name, const T& got, const T& expected) {
        if (got == expected) {
            results.push_back({name, true, ""});
        } else {
            std::ostringstream os;
            os << "got " << render_or(got) << ", expected " << render_or(expected);
            results.push_back({name, false, os.str()});
        }
    }

    template <typename T>
    static std::string render_or(const T& value) {
        if constexpr (requires { render(value); }) return render(value);
        else if constexpr (requires { value.get_str(); }) return value.get_str();
        else return "(value)";
    }
};

std::vector<Word> random_corpus(std::size_t count, std::size_t max_len) {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_int_distribution<int> letter_dist(0, 1);
    std::vector<Word> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Letter> letters(len_dist(rng));
        for (Letter& l : letters)
            l = letter_dist(rng) ? Letter::Creator : Letter::Annihilator;
        out.emplace_back(std::move(letters));
    }
    return out;
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    Suite suite{results};
    const long long guard = options.guard;
    const WeightSequence seq_p = predefined_sequence(SequenceName::P);
    const WeightSequence seq_unit = predefined_sequence(SequenceName::Unit);
    const WeightSequence seq_nc = predefined_sequence(SequenceName::Noncrossing);

    // --- criterion 1: worked-example reproduction -------------------------
    {
        suite.check_eq("worked-standard-bbdbbdbb",
                       normal_order_standard(parse_word("adaadaa"), guard),
                       power_form({{{2, 5}, PolyP(1)}, {{1, 4}, PolyP(4)}, {{0, 3}, PolyP(2)}}));
        PolyP two_p_plus_1(std::vector<Int>{1, 2});
        PolyP p_squared(std::vector<Int>{0, 0, 1});
        suite.check_eq("worked-p-da3", normal_order_p(number_operator_word(3), guard),
                       power_form({{{3, 3}, PolyP(1)}, {{2, 2}, two_p_plus_1}, {{1, 1}, p_squared}}));
        suite.check_eq("worked-p-ad", normal_order_p(parse_word("ad"), guard),
                       power_form({{{1, 1}, PolyP(1)}, {{0, 0}, PolyP::variable()}}));

        NormalForm expected_da2;
        expected_da2.terms[{2, 2}] = WeightPolynomial(1);
        expected_da2.terms[{1, 1}] = sym(1);
        suite.check_eq("worked-omega-da2", normal_order_omega(number_operator_word(2), guard),
                       expected_da2);

        NormalForm expected_da3;
        expected_da3.terms[{3, 3}] = WeightPolynomial(1);
        expected_da3.terms[{2, 2}] = WeightPolynomial(2) * sym(1) + sym(3);
        expected_da3.terms[{1, 1}] = sym(1) * sym(1);
        suite.check_eq("worked-omega-da3", normal_order_omega(number_operator_word(3), guard),
                       expected_da3);

        std::vector<std::string> words;
        for (const Contraction& c : all_contractions(parse_word("aadd"), guard))
            words.push_back(render(contraction_word(parse_word("aadd"), c)));
        std::sort(words.begin(), words.end());
        std::vector<std::string> expected_words{"aadd", "aedE", "apd", "eaEd",
                                                "eadE", "eeEE", "epE"};
        std::sort(expected_words.begin(), expected_words.end());
        suite.check("worked-contraction-multiset-aadd", words == expected_words);
        suite.check_eq("worked-count-adad", count_contractions(parse_word("adad")), Int(5));
        suite.check_eq("worked-count-aadd", count_contractions(parse_word("aadd")), Int(7));
    }

    // --- criterion 2: erratum checks (derived oracles) --------------------
    {
        NormalForm n4 = normal_order_omega(number_operator_word(4), guard);
        WeightPolynomial derived = WeightPolynomial(3) * sym(1) * sym(1) +
                                   WeightPolynomial(2) * sym(1) * sym(3) +
                                   sym(kCrossing) * sym(3) * sym(3) + sym(1) * sym(5);
        WeightPolynomial printed = WeightPolynomial(2) * sym(1) * sym(1) +
                                   WeightPolynomial(2) * sym(1) * sym(3) +
                                   sym(kCrossing) * sym(3) * sym(3) + sym(1) * sym(5);
        const WeightPolynomial& got = n4.terms.at({2, 2});
        suite.check_eq("erratum-omega-n4-k2-derived", got, derived);
        suite.check("erratum-omega-n4-k2-printed-value-differs", got != printed,
                    "published coefficient 2w1^2+... fails both specializations");
        suite.check_eq("erratum-omega-n4-k2-unit-specialization",
                       specialize(got, seq_unit).to_integer_poly(), PolyP(stirling2(4, 2)));
        suite.check_eq("erratum-omega-n4-k2-p-specialization",
                       specialize(got, seq_p).to_integer_poly(), stirling_p_rec(4, 2));

        PolyNormalForm enumerated = normal_order_p(parse_word("add"), guard);
        suite.check_eq("erratum-closed-form-enumeration-v1-u2", enumerated,
                       power_form({{{2, 1}, PolyP(1)}, {{1, 0}, PolyP(std::vector<Int>{1, 1})}}));
        suite.check("erratum-closed-form-inconsistent-v1-u2",
                    closed_form_power_word(1, 2) != enumerated,
                    "published closed form gives leading coefficient 4, enumeration gives 1");

        // The published contraction multiset for aa†aa† lists six members, but
        // a sixth member would force the unit-weight ordering of aa†aa† to a
        // total weight of 6, while the commutator gives (a†)²a² + 3a†a + 1.
        PolyNormalForm adad = normal_order_standard(parse_word("adad"), guard);
        Int total_weight = 0;
        for (auto& [key, coeff] : adad.terms)
            for (const Int& c : coeff.coefficients()) total_weight += c;
        suite.check_eq("erratum-rc-adad-total-weight", total_weight, Int(5));
        suite.check_eq("erratum-rc-adad-constant-term", adad.terms.at({0, 0}), PolyP(1));
        suite.check("erratum-rc-adad-published-count-differs",
                    count_contractions(parse_word("adad")) != Int(6),
                    "published multiset has a spurious sixth member");
    }

    // --- criterion 3: three-route Stirling agreement -----------------------
    {
        bool rec_docagne = true, rec_omega = true, rec_knm = true;
        std::string detail;
        for (int n = 1; n <= options.max_n; ++n)
            for (int k = 1; k <= n; ++k) {
                PolyP rec = stirling_p_rec(n, k);
                if (stirling_p_docagne(n, k) != rec) {
                    rec_docagne = false;
                    detail = "docagne mismatch at n=" + std::to_string(n) +
                             " k=" + std::to_string(k);
                }
                if (specialize(stirling_omega(n, k, guard), seq_p).to_integer_poly() != rec)
                    rec_omega = false;
                std::vector<Int> via_knm;
                for (int m = 0; m <= n - k; ++m) via_knm.push_back(stirling_knm(n, k, m));
                if (PolyP(std::move(via_knm)) != rec) rec_knm = false;
            }
        suite.check("stirling-rec-vs-docagne", rec_docagne, detail);
        suite.check("stirling-rec-vs-omega-specialized", rec_omega);
        suite.check("stirling-rec-vs-knm-sum", rec_knm);
    }

    // --- criterion 4: classical collapses ----------------------------------
    {
        bool p1 = true;
        for (int n = 1; n <= 12; ++n)
            for (int k = 1; k <= n; ++k)
                if (stirling_p_rec(n, k).evaluate(1) != stirling2(n, k)) p1 = false;
        suite.check("collapse-p1-stirling2", p1);

        bool p0 = true;
        for (int n = 2; n <= 10; ++n) {
            Int sum = 0;
            for (int k = 1; k <= n; ++k) sum += stirling_p_rec(n, k).evaluate(0);
            if (sum != bell_number(n - 1)) p0 = false;
        }
        suite.check("collapse-p0-bell", p0);

        bool omega_nn = true, omega_n1 = true;
        for (int n = 1; n <= options.max_n; ++n) {
            if (stirling_omega(n, n, guard) != WeightPolynomial(1)) omega_nn = false;
            WeightPolynomial power(1);
            for (int i = 0; i < n - 1; ++i) power = power * sym(1);
            if (stirling_omega(n, 1, guard) != power) omega_n1 = false;
        }
        suite.check("collapse-omega-null", omega_nn);
        suite.check("collapse-omega-adjacent-chain", omega_n1);
    }

    // --- criterion 5: generating-function verification ---------------------
    {
        bool spk_ok = true, sxy_ok = true, p1_ok = true;
        TruncatedSeries sxy = egf_Sxy(options.order);
        for (int k = 1; k <= options.order; ++k) {
            TruncatedSeries spk = egf_Spk(k, options.order);
            for (int n = k; n <= options.order; ++n) {
                PolyP expected = stirling_p_rec(n, k);
                PolyQ from_spk = extract_egf_coefficient(spk, n).as_poly_in_p();
                PolyQ from_sxy = extract_egf_coefficient(sxy, n, k).as_poly_in_p();
                if (from_spk != PolyQ(expected)) spk_ok = false;
                if (from_sxy != PolyQ(expected)) sxy_ok = false;
                if (from_sxy.evaluate(1) != Rat(stirling2(n, k))) p1_ok = false;
            }
        }
        suite.check("egf-spk-matches-recurrence", spk_ok);
        suite.check("egf-sxy-matches-recurrence", sxy_ok);
        suite.check("egf-sxy-p1-classical", p1_ok);
    }

    // --- criterion 6: bijection suite --------------------------------------
    {
        bool lemma1_rt = true, lemma2_rt = true, transport = true, joint_ok = true;
        for (int n = 2; n <= std::min(options.max_n, 7); ++n) {
            for (int k = 0; k <= n - 1; ++k)
                for (const PointerVector& v : enumerate_Fnk(n - 1, k)) {
                    if (lemma1_inverse(lemma1_forward(v)) != v) lemma1_rt = false;
                    if (lemma2_forward(n, lemma2_inverse(v)) != v) lemma2_rt = false;
                }
            for (const SetPartition& p : enumerate_partitions(n))
                if (lemma1_forward(lemma1_inverse(p)) != p) lemma1_rt = false;

            std::map<std::pair<std::size_t, std::size_t>, Int> joint;
            for (const Contraction& c : all_contractions(number_operator_word(n), guard)) {
                if (lemma2_inverse(lemma2_forward(n, c)) != c) lemma2_rt = false;
                SetPartition p = contraction_to_partition(n, c);
                if (p.blocks.size() != static_cast<std::size_t>(n) - r_degree(c))
                    transport = false;
                if (rises(p) != p_degree(c)) transport = false;
                joint[{p.blocks.size(), rises(p)}] += 1;
            }
            for (int k = 1; k <= n; ++k)
                for (int m = 0; m <= n - k; ++m) {
                    Int expected = stirling_knm(n, k, m);
                    Int got = joint.count({static_cast<std::size_t>(k),
                                           static_cast<std::size_t>(m)})
                                  ? joint[{static_cast<std::size_t>(k),
                                           static_cast<std::size_t>(m)}]
                                  : Int(0);
                    if (got != expected) joint_ok = false;
                }
        }
        suite.check("bijection-lemma1-round-trip", lemma1_rt);
        suite.check("bijection-lemma2-round-trip", lemma2_rt);
        suite.check("bijection-statistic-transport", transport);
        suite.check("bijection-joint-distribution", joint_ok);

        bool card = true;
        for (int n = 1; n <= options.max_n; ++n)
            for (int k = 1; k <= n; ++k)
                if (Int(static_cast<long>(enumerate_Fnk(n - 1, k - 1).size())) !=
                    stirling2(n, k))
                    card = false;
        suite.check("bijection-cardinality-fnk", card);
    }

    // --- criterion 7: consistency of orderings on a random corpus ----------
    {
        bool p_route = true, standard_route = true, noncrossing_route = true;
        for (const Word& w : random_corpus(200, 10)) {
            NormalForm omega = normal_order_omega(w, guard);
            PolyNormalForm p_form = normal_order_p(w, guard);
            if (specialize(omega, seq_p) != p_form) p_route = false;

            PolyNormalForm standard = normal_order_standard(w, guard);
            PolyNormalForm collapsed;
            for (auto& [key, poly] : p_form.terms) {
                Int v = poly.evaluate(1);
                if (v != 0) collapsed.terms.emplace(key, PolyP(v));
            }
            if (collapsed != standard) standard_route = false;

            // ω^{nc} keeps exactly the crossing-free contractions, weight 1 each
            std::map<TermKey, Int, TermKeyDescending> nc_counts;
            enumerate_contractions(
                w,
                [&](const Contraction& c) {
                    if (crossing_number(c) == 0) {
                        DotMonomial dot = double_dot(contraction_word(w, c));
                        nc_counts[TermKey{dot.creators, dot.annihilators}] += 1;
                    }
                },
                guard);
            PolyNormalForm nc_expected;
            for (auto& [key, v] : nc_counts) nc_expected.terms.emplace(key, PolyP(v));
            if (specialize(omega, seq_nc) != nc_expected) noncrossing_route = false;
        }
        suite.check("routes-omega-p-specialization", p_route);
        suite.check("routes-p1-standard", standard_route);
        suite.check("routes-noncrossing-filter", noncrossing_route);
    }

    // recurrence route vs enumeration for the number-operator powers
    {
        bool ok = true;
        for (int n = 1; n <= options.max_n; ++n)
            if (normal_order_number_power_p(n) != normal_order_p(number_operator_word(n), guard))
                ok = false;
        suite.check("routes-number-power-recurrence", ok);
    }

    if (options.inject_fault) {
        // Corrupt a copy of the classical triangle and compare: must fail.
        Int corrupted = stirling2(5, 2) + 1;
        suite.check_eq("negative-control-corrupted-table", corrupted, stirling2(5, 2));
    }

    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

} // namespace bno
