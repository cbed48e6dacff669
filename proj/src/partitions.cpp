#include "bno/partitions.hpp"

#include "bno/errors.hpp"

#include <algorithm>
#include <sstream>

namespace bno {

void validate_pointer_vector(const PointerVector& v) {
    const int n = static_cast<int>(v.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int i = 1; i <= n; ++i) {
        int entry = v.at(static_cast<std::size_t>(i));
        if (entry == PointerVector::kE) continue;
        if (entry < i || entry > n)
            throw domain_error("entry " + std::to_string(entry) + " at position " +
                               std::to_string(i) + " is outside [" + std::to_string(i) + "," +
                               std::to_string(n) + "]");
        if (seen[static_cast<std::size_t>(entry)])
            throw domain_error("value " + std::to_string(entry) + " repeats");
        seen[static_cast<std::size_t>(entry)] = true;
    }
}

void validate_partition(const SetPartition& p) {
    std::size_t n = p.ground_size();
    std::vector<bool> seen(n + 1, false);
    int prev_min = 0;
    for (auto& block : p.blocks) {
        if (block.empty()) throw domain_error("empty block");
        if (!std::is_sorted(block.begin(), block.end()))
            throw domain_error("block not sorted ascending");
        if (block.front() <= prev_min) throw domain_error("blocks not ordered by least element");
        prev_min = block.front();
        for (int x : block) {
            if (x < 1 || static_cast<std::size_t>(x) > n || seen[static_cast<std::size_t>(x)])
                throw domain_error("element " + std::to_string(x) + " missing or repeated");
            seen[static_cast<std::size_t>(x)] = true;
        }
    }
}

namespace {

void enumerate_Fnk_impl(int n, int k, int pos, PointerVector& v, std::vector<bool>& used,
                        int e_so_far, std::vector<PointerVector>& out) {
    if (pos > n) {
        if (e_so_far == k) out.push_back(v);
        return;
    }
    // e entries still needed cannot exceed remaining positions
    int remaining = n - pos + 1;
    if (k - e_so_far > remaining) return;
    v.entries[static_cast<std::size_t>(pos - 1)] = PointerVector::kE;
    enumerate_Fnk_impl(n, k, pos + 1, v, used, e_so_far + 1, out);
    for (int val = pos; val <= n; ++val) {
        if (used[static_cast<std::size_t>(val)]) continue;
        used[static_cast<std::size_t>(val)] = true;
        v.entries[static_cast<std::size_t>(pos - 1)] = val;
        enumerate_Fnk_impl(n, k, pos + 1, v, used, e_so_far, out);
        used[static_cast<std::size_t>(val)] = false;
    }
    v.entries[static_cast<std::size_t>(pos - 1)] = PointerVector::kE;
}

} // namespace

std::vector<PointerVector> enumerate_Fnk(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw domain_error("enumerate_Fnk requires 0 <= k <= n");
    std::vector<PointerVector> out;
    PointerVector v;
    v.entries.assign(static_cast<std::size_t>(n), PointerVector::kE);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    enumerate_Fnk_impl(n, k, 1, v, used, 0, out);
    return out;
}

namespace {

void enumerate_partitions_impl(int n, int next, SetPartition& acc,
                               std::vector<SetPartition>& out) {
    if (next > n) {
        out.push_back(acc);
        return;
    }
    // index loop: the recursive push_back below may reallocate acc.blocks
    const std::size_t existing = acc.blocks.size();
    for (std::size_t b = 0; b < existing; ++b) {
        acc.blocks[b].push_back(next);
        enumerate_partitions_impl(n, next + 1, acc, out);
        acc.blocks[b].pop_back();
    }
    acc.blocks.push_back({next});
    enumerate_partitions_impl(n, next + 1, acc, out);
    acc.blocks.pop_back();
}

} // namespace

std::vector<SetPartition> enumerate_partitions(int n) {
    if (n < 1) throw domain_error("enumerate_partitions requires n >= 1");
    std::vector<SetPartition> out;
    SetPartition acc;
    enumerate_partitions_impl(n, 1, acc, out);
    return out;
}

std::size_t rises(const SetPartition& p) {
    std::size_t count = 0;
    for (auto& block : p.blocks)
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            if (block[i + 1] == block[i] + 1) ++count;
    return count;
}

SetPartition lemma1_forward(const PointerVector& v) {
    validate_pointer_vector(v);
    const int n = static_cast<int>(v.size()) + 1;
    // Extended vector with entry(n) = e.
    auto entry = [&](int x) {
        return x == n ? PointerVector::kE : v.at(static_cast<std::size_t>(x));
    };
    std::vector<bool> placed(static_cast<std::size_t>(n) + 1, false);
    SetPartition p;
    for (int start = 1; start <= n; ++start) {
        if (placed[static_cast<std::size_t>(start)]) continue;
        std::vector<int> block;
        int x = start;
        while (true) {
            block.push_back(x);
            placed[static_cast<std::size_t>(x)] = true;
            int e = entry(x);
            if (e == PointerVector::kE) break;
            x = 1 + e;
        }
        std::sort(block.begin(), block.end());
        p.blocks.push_back(std::move(block));
    }
    return p;
}

PointerVector lemma1_inverse(const SetPartition& p) {
    validate_partition(p);
    const int n = static_cast<int>(p.ground_size());
    if (n < 1) throw domain_error("lemma1_inverse requires a partition of a non-empty set");
    PointerVector v;
    v.entries.assign(static_cast<std::size_t>(n - 1), PointerVector::kE);
    for (auto& block : p.blocks)
        for (std::size_t i = 0; i + 1 < block.size(); ++i) {
            int x = block[i];
            if (x <= n - 1) v.entries[static_cast<std::size_t>(x - 1)] = block[i + 1] - 1;
        }
    return v;
}

PointerVector lemma2_forward(int n, const Contraction& c) {
    if (n < 1) throw domain_error("lemma2_forward requires n >= 1");
    Word host = number_operator_word(n);
    validate_contraction(host, c);
    PointerVector v;
    v.entries.assign(static_cast<std::size_t>(n - 1), PointerVector::kE);
    for (const Edge& e : c.edges) {
        // creator at 2n-2j+1, annihilator at 2n-2i
        int j = (2 * n + 1 - e.right) / 2;
        int i = (2 * n - e.left) / 2;
        v.entries[static_cast<std::size_t>(j - 1)] = i;
    }
    return v;
}

Contraction lemma2_inverse(const PointerVector& v) {
    validate_pointer_vector(v);
    const int n = static_cast<int>(v.size()) + 1;
    Contraction c;
    for (int j = 1; j <= n - 1; ++j) {
        int i = v.at(static_cast<std::size_t>(j));
        if (i == PointerVector::kE) continue;
        c.edges.push_back({2 * n - 2 * i, 2 * n - 2 * j + 1});
    }
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

SetPartition contraction_to_partition(int n, const Contraction& c) {
    return lemma1_forward(lemma2_forward(n, c));
}

std::string render(const PointerVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.entries.size(); ++i) {
        if (i) out += ",";
        out += v.entries[i] == PointerVector::kE ? "e" : std::to_string(v.entries[i]);
    }
    return out;
}

std::string render(const SetPartition& p) {
    std::string out;
    for (auto& block : p.blocks) {
        if (!out.empty()) out += ",";
        out += "{";
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(block[i]);
        }
        out += "}";
    }
    return out;
}

PointerVector parse_pointer_vector(const std::string& text) {
    PointerVector v;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        // trim spaces
        auto first = token.find_first_not_of(' ');
        auto last = token.find_last_not_of(' ');
        if (first == std::string::npos) throw domain_error("empty entry in pointer vector");
        token = token.substr(first, last - first + 1);
        if (token == "e") {
            v.entries.push_back(PointerVector::kE);
        } else {
            try {
                v.entries.push_back(std::stoi(token));
            } catch (const std::exception&) {
                throw domain_error("bad pointer vector entry '" + token + "'");
            }
        }
    }
    validate_pointer_vector(v);
    return v;
}

SetPartition parse_partition(const std::string& text) {
    SetPartition p;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '{') throw domain_error("expected '{' in partition text");
        std::size_t close = text.find('}', pos);
        if (close == std::string::npos) throw domain_error("unterminated block");
        std::string inner = text.substr(pos + 1, close - pos - 1);
        std::vector<int> block;
        std::stringstream ss(inner);
        std::string token;
        while (std::getline(ss, token, ',')) {
            try {
                block.push_back(std::stoi(token));
            } catch (const std::exception&) {
                throw domain_error("bad partition element '" + token + "'");
            }
        }
        std::sort(block.begin(), block.end());
        p.blocks.push_back(std::move(block));
        pos = close + 1;
    }
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    validate_partition(p);
    return p;
}

} // namespace bno
