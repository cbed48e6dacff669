#include "bno/contraction.hpp"

#include "bno/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace bno {

void validate_contraction(const Word& w, const Contraction& c) {
    const int n = static_cast<int>(w.size());
    std::vector<bool> used(w.size() + 1, false);
    for (const Edge& e : c.edges) {
        if (e.left < 1 || e.right > n || e.left >= e.right)
            throw domain_error("edge " + std::to_string(e.left) + "-" + std::to_string(e.right) +
                               " is out of range or not left-to-right");
        if (w.at(e.left) != Letter::Annihilator)
            throw domain_error("edge left endpoint " + std::to_string(e.left) +
                               " is not an annihilator");
        if (w.at(e.right) != Letter::Creator)
            throw domain_error("edge right endpoint " + std::to_string(e.right) +
                               " is not a creator");
        for (int pos : {e.left, e.right}) {
            if (used[pos])
                throw domain_error("position " + std::to_string(pos) +
                                   " is contracted more than once");
            used[pos] = true;
        }
    }
}

Int count_contractions(const Word& w) {
    // Scan left to right; state f = number of annihilators still free.
    // At a creator, it either stays uncontracted or pairs with one of them.
    std::vector<Int> counts{1};
    for (Letter l : w.letters()) {
        if (l == Letter::Annihilator) {
            counts.insert(counts.begin(), 0); // new[f+1] = old[f]
        } else {
            for (std::size_t f = 0; f + 1 < counts.size(); ++f)
                counts[f] += Int(static_cast<unsigned long>(f + 1)) * counts[f + 1];
        }
    }
    Int total = 0;
    for (const Int& v : counts) total += v;
    return total;
}

namespace {

void enumerate_impl(const Word& w, std::vector<Edge>& edges, std::vector<bool>& used, int from,
                    const std::function<void(const Contraction&)>& visit) {
    visit(Contraction{edges});
    const int n = static_cast<int>(w.size());
    for (int a = from; a <= n; ++a) {
        if (w.at(a) != Letter::Annihilator || used[a]) continue;
        used[a] = true;
        for (int c = a + 1; c <= n; ++c) {
            if (w.at(c) != Letter::Creator || used[c]) continue;
            used[c] = true;
            edges.push_back({a, c});
            enumerate_impl(w, edges, used, a + 1, visit);
            edges.pop_back();
            used[c] = false;
        }
        used[a] = false;
    }
}

} // namespace

void enumerate_contractions(const Word& w, const std::function<void(const Contraction&)>& visit,
                            long long guard) {
    if (guard > 0) {
        Int count = count_contractions(w);
        if (count > Int(static_cast<long>(guard)))
            throw capacity_error("word has " + count.get_str() +
                                 " contractions, exceeding the guard of " + std::to_string(guard));
    }
    std::vector<Edge> edges;
    std::vector<bool> used(w.size() + 1, false);
    enumerate_impl(w, edges, used, 1, visit);
}

std::vector<Contraction> all_contractions(const Word& w, long long guard) {
    std::vector<Contraction> out;
    enumerate_contractions(w, [&](const Contraction& c) { out.push_back(c); }, guard);
    return out;
}

ContractionWord contraction_word(const Word& w, const Contraction& c) {
    validate_contraction(w, c);
    const std::size_t n = w.size();
    // 0 = free, 1 = e, 2 = e†, 3 = left half of a collapsed p, 4 = skip
    std::vector<int> mark(n + 1, 0);
    for (const Edge& e : c.edges) {
        if (e.right == e.left + 1) {
            mark[e.left] = 3;
            mark[e.right] = 4;
        } else {
            mark[e.left] = 1;
            mark[e.right] = 2;
        }
    }
    ContractionWord out;
    out.reserve(n);
    for (std::size_t pos = 1; pos <= n; ++pos) {
        switch (mark[pos]) {
        case 0:
            out.push_back(w.at(pos) == Letter::Annihilator ? CSymbol::A : CSymbol::Adag);
            break;
        case 1: out.push_back(CSymbol::E); break;
        case 2: out.push_back(CSymbol::Edag); break;
        case 3: out.push_back(CSymbol::P); break;
        case 4: break;
        }
    }
    return out;
}

DotMonomial double_dot(const ContractionWord& cw) {
    DotMonomial m;
    for (CSymbol s : cw) {
        if (s == CSymbol::Adag) ++m.creators;
        else if (s == CSymbol::A) ++m.annihilators;
        else if (s == CSymbol::P) ++m.p_power;
    }
    return m;
}

std::size_t p_degree(const Contraction& c) {
    std::size_t k = 0;
    for (const Edge& e : c.edges)
        if (e.distance() == 1) ++k;
    return k;
}

std::size_t crossing_number(const Contraction& c) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < c.edges.size(); ++i)
        for (std::size_t j = i + 1; j < c.edges.size(); ++j) {
            const Edge& e = c.edges[i];
            const Edge& f = c.edges[j];
            if ((e.left < f.left && f.left < e.right && e.right < f.right) ||
                (f.left < e.left && e.left < f.right && f.right < e.right))
                ++k;
        }
    return k;
}

std::string render(const ContractionWord& cw) {
    std::string out;
    out.reserve(cw.size());
    for (CSymbol s : cw) {
        switch (s) {
        case CSymbol::A: out.push_back('a'); break;
        case CSymbol::Adag: out.push_back('d'); break;
        case CSymbol::E: out.push_back('e'); break;
        case CSymbol::Edag: out.push_back('E'); break;
        case CSymbol::P: out.push_back('p'); break;
        }
    }
    return out;
}

std::string render(const Contraction& c) {
    std::string out;
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(c.edges[i].left) + "-" + std::to_string(c.edges[i].right);
    }
    return out;
}

Contraction parse_contraction(const std::string& text) {
    Contraction c;
    std::size_t pos = 0;
    auto read_int = [&]() -> int {
        std::size_t start = pos;
        long v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000'000) throw parse_error("position out of range", start + 1);
            ++pos;
        }
        if (pos == start) throw parse_error("expected a position", pos + 1);
        return static_cast<int>(v);
    };
    while (pos < text.size()) {
        int left = read_int();
        if (pos >= text.size() || text[pos] != '-') throw parse_error("expected '-'", pos + 1);
        ++pos;
        int right = read_int();
        c.edges.push_back({left, right});
        if (pos < text.size()) {
            if (text[pos] != ',') throw parse_error("expected ','", pos + 1);
            ++pos;
        }
    }
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

} // namespace bno
