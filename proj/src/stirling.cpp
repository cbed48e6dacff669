#include "bno/stirling.hpp"

#include "bno/errors.hpp"
#include "bno/word.hpp"

namespace bno {

Int stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    // Row iteration; row[j] = S(i,j).
    std::vector<Int> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1; // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) row[j] = Int(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

Int bell_number(int n) {
    if (n < 1) throw domain_error("bell_number requires n >= 1");
    std::vector<Int> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j >= 1; --j) row[j] = Int(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    Int total = 0;
    for (const Int& v : row) total += v;
    return total;
}

PolyQ bell_polynomial(int n, const PolyQ& x) {
    if (n < 1) throw domain_error("bell_polynomial requires n >= 1");
    PolyQ out;
    PolyQ power(1);
    for (int k = 1; k <= n; ++k) {
        power = power * x;
        out += PolyQ(Rat(stirling2(n, k))) * power;
    }
    return out;
}

PolyP stirling_p_rec(int n, int k) {
    if (n < 1 || k < 1 || k > n) return {};
    // row[j] = S_p(i,j) for the current i.
    std::vector<PolyP> row(static_cast<std::size_t>(k) + 1);
    row[1] = PolyP(1); // S_p(1,1) = p^0
    for (int i = 2; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 2; --j)
            row[j] = (PolyP(j - 1) + PolyP::variable()) * row[j] + row[j - 1];
        row[1] = PolyP::variable() * row[1]; // S_p(i,1) = p^{i-1}
    }
    return row[k];
}

PolyP stirling_p_docagne(int n, int k) {
    if (n < k || k < 1) throw domain_error("stirling_p_docagne requires n >= k >= 1");
    // ((-1)^{k-1}/(k-1)!) sum_j (-1)^j C(k-1,j) (p+j)^{n-1}
    PolyQ sum;
    Int binom = 1; // C(k-1, j)
    for (int j = 0; j <= k - 1; ++j) {
        PolyQ base(std::vector<Rat>{Rat(j), Rat(1)}); // p + j
        PolyQ power(1);
        for (int i = 0; i < n - 1; ++i) power = power * base;
        PolyQ term = PolyQ(Rat((j % 2 == 0) ? binom : -binom)) * power;
        sum += term;
        binom = binom * (k - 1 - j) / (j + 1);
    }
    Int factorial = 1;
    for (int i = 2; i <= k - 1; ++i) factorial *= i;
    Rat scale(((k - 1) % 2 == 0) ? 1 : -1, factorial);
    scale.canonicalize();
    return (PolyQ(scale) * sum).to_integer_poly();
}

Int stirling_knm(int n, int k, int m) {
    if (n < 1 || k < 1 || k > n || m < 0 || m > n - k) return 0;
    // table[j][r] = S(i,j;r); S(1,1;0) = 1.
    std::vector<std::vector<Int>> table(static_cast<std::size_t>(k) + 1,
                                        std::vector<Int>(static_cast<std::size_t>(m) + 1, 0));
    table[1][0] = 1;
    for (int i = 2; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            for (int r = std::min(i - j, m); r >= 0; --r) {
                Int v = Int(j - 1) * table[j][r];
                if (r >= 1) v += table[j][r - 1];
                if (j >= 2) v += table[j - 1][r];
                table[j][r] = v;
            }
    }
    return table[k][m];
}

WeightPolynomial stirling_omega(int n, int k, long long guard) {
    if (n < 1 || k < 1 || k > n) throw domain_error("stirling_omega requires 1 <= k <= n");
    WeightPolynomial out;
    const std::size_t target = static_cast<std::size_t>(n - k);
    Word w = number_operator_word(n);
    enumerate_contractions(
        w,
        [&](const Contraction& c) {
            if (r_degree(c) == target) out.add_term(contraction_weight_monomial(c), 1);
        },
        guard);
    return out;
}

WeightPolynomial bell_omega(int n, long long guard) {
    if (n < 1) throw domain_error("bell_omega requires n >= 1");
    WeightPolynomial out;
    Word w = number_operator_word(n);
    enumerate_contractions(
        w, [&](const Contraction& c) { out.add_term(contraction_weight_monomial(c), 1); }, guard);
    return out;
}

} // namespace bno
