#pragma once

#include "bno/contraction.hpp"

#include <string>
#include <vector>

namespace bno {

// A vector in F_n: entry at 1-based position i is either e (stored as 0)
// or an integer in [i, n]; non-e entries are pairwise distinct.
struct PointerVector {
    static constexpr int kE = 0;

    std::vector<int> entries;

    std::size_t size() const { return entries.size(); }
    int at(std::size_t pos) const { return entries.at(pos - 1); } // 1-based

    std::size_t e_count() const {
        std::size_t k = 0;
        for (int v : entries)
            if (v == kE) ++k;
        return k;
    }

    bool operator==(const PointerVector&) const = default;
};

// Throws domain_error if v violates the F_n membership rules.
void validate_pointer_vector(const PointerVector& v);

// Blocks non-empty, pairwise disjoint, covering [n], ordered by least element;
// each block sorted ascending.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    std::size_t ground_size() const {
        std::size_t n = 0;
        for (auto& b : blocks) n += b.size();
        return n;
    }

    bool operator==(const SetPartition&) const = default;
};

void validate_partition(const SetPartition& p);

// All vectors of F_n with exactly k entries e, deterministic order
// (position by position, e before ascending integer values).
std::vector<PointerVector> enumerate_Fnk(int n, int k);

// All partitions of [n] (test/demo helper; sizes stay Bell-number small).
std::vector<SetPartition> enumerate_partitions(int n);

// Number of indices i with i and i+1 in the same block.
std::size_t rises(const SetPartition& p);

// F_{n-1,k-1} -> P_{n,k}: append e, then chase pointers starting from the
// least unused element, collecting x, 1+π(x), ... until an e entry.
SetPartition lemma1_forward(const PointerVector& v);

// Inverse: entry(x) = (successor of x in its block) - 1, or e at a block
// maximum; position n is dropped.
PointerVector lemma1_inverse(const SetPartition& p);

// Contractions of (a†a)^n <-> F_{n-1}: creators indexed j = 1..n-1 from the
// right (the leftmost creator is never contractible); entry(j) = e when the
// j-th creator is free, otherwise i where its edge's annihilator sits at
// engine position 2n-2i.
PointerVector lemma2_forward(int n, const Contraction& c);

Contraction lemma2_inverse(const PointerVector& v);

// lemma1_forward ∘ lemma2_forward: blocks = n - r_degree, rises = p_degree.
SetPartition contraction_to_partition(int n, const Contraction& c);

// Text forms: "1,e,3,e" and "{1,2},{3,4},{5}".
std::string render(const PointerVector& v);
std::string render(const SetPartition& p);
PointerVector parse_pointer_vector(const std::string& text);
SetPartition parse_partition(const std::string& text);

} // namespace bno
