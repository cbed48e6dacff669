#pragma once

#include "bno/word.hpp"

#include <cstddef>
#include <functional>
#include <gmpxx.h>
#include <string>
#include <vector>

namespace bno {

using Int = mpz_class;

// Default budget for materializing contraction streams.
inline constexpr long long kDefaultGuard = 100'000'000;

// An edge pairs the annihilator at `left` with a creator at `right` > left.
struct Edge {
    int left = 0;
    int right = 0;

    int distance() const { return right - left; }
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

// A set of disjoint edges over a fixed host word; kept sorted by left
// endpoint (lefts are pairwise distinct). The empty set is the null
// contraction.
struct Contraction {
    std::vector<Edge> edges;

    bool operator==(const Contraction&) const = default;
};

enum class CSymbol { A, Adag, E, Edag, P };

using ContractionWord = std::vector<CSymbol>;

// (a†)^v a^u p^w left after the double dot operation.
struct DotMonomial {
    std::size_t creators = 0;     // v
    std::size_t annihilators = 0; // u
    std::size_t p_power = 0;      // w

    bool operator==(const DotMonomial&) const = default;
};

// Throws domain_error unless c is a valid contraction of w.
void validate_contraction(const Word& w, const Contraction& c);

// Exact number of contractions, computed without materializing them.
// For (a†a)^n this is the Bell number B(n).
Int count_contractions(const Word& w);

// Visits every contraction exactly once, null contraction first, in
// lexicographic order of the sorted edge lists. Throws capacity_error
// (naming the exact count) when the count exceeds `guard`; pass guard <= 0
// to disable the check.
void enumerate_contractions(const Word& w, const std::function<void(const Contraction&)>& visit,
                            long long guard = kDefaultGuard);

// Convenience collector for small words.
std::vector<Contraction> all_contractions(const Word& w, long long guard = kDefaultGuard);

// Applies the contraction: a paired adjacent (left, left+1) edge collapses
// to a single p; any other edge marks its endpoints e / e†; uncontracted
// letters pass through.
ContractionWord contraction_word(const Word& w, const Contraction& c);

DotMonomial double_dot(const ContractionWord& cw);

inline std::size_t r_degree(const Contraction& c) { return c.edges.size(); }

std::size_t p_degree(const Contraction& c);

// Number of unordered pairs of crossing edges (i<k<j<l).
std::size_t crossing_number(const Contraction& c);

// Textual forms: tokens a d e E p; edge lists as "2-3,4-5" ("" for null).
std::string render(const ContractionWord& cw);
std::string render(const Contraction& c);
Contraction parse_contraction(const std::string& text);

} // namespace bno
