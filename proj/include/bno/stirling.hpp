#pragma once

#include "bno/contraction.hpp"
#include "bno/poly.hpp"
#include "bno/weight.hpp"

#include <vector>

namespace bno {

// Classical Stirling numbers of the second kind, S(n+1,k) = kS(n,k)+S(n,k-1)
// with S(n,0) = [n=0]; zero outside 0 <= k <= n.
Int stirling2(int n, int k);

// B(n) = sum_k S(n,k).
Int bell_number(int n);

// B(n,x) = sum_k S(n,k) x^k over any exact Value x.
PolyQ bell_polynomial(int n, const PolyQ& x);

// S_p(n,k) via the recurrence S_p(n,k) = (k-1+p)S_p(n-1,k) + S_p(n-1,k-1),
// S_p(n,1) = p^{n-1}; zero polynomial outside 1 <= k <= n.
PolyP stirling_p_rec(int n, int k);

// S_p(n,k) via d'Ocagne's alternating sum, computed with exact rationals;
// throws domain_error if the result fails to be integral.
PolyP stirling_p_docagne(int n, int k);

// Number of partitions of [n] into k blocks with m rises (equivalently
// contractions of (a†a)^n with n-k edges, m of them adjacent).
Int stirling_knm(int n, int k, int m);

// S_ω(n,k): weighted sum over contractions of (a†a)^n with exactly n-k edges.
WeightPolynomial stirling_omega(int n, int k, long long guard = kDefaultGuard);

// B_ω(n) = sum_k S_ω(n,k).
WeightPolynomial bell_omega(int n, long long guard = kDefaultGuard);

} // namespace bno
