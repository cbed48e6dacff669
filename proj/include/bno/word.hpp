#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bno {

enum class Letter { Annihilator, Creator };

// A finite operator word, positions 1..n left to right in written order.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // 1-based access.
    Letter at(std::size_t pos) const { return letters_.at(pos - 1); }

    const std::vector<Letter>& letters() const { return letters_; }

    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

// Grammar: word := factor+ ; factor := letter | group ;
//          letter := 'a' | 'd' ; group := '(' word ')' '^' posint | letter '^' posint
// 'a' is the annihilator, 'd' the creator; whitespace is ignored.
Word parse_word(const std::string& text);

// Canonical rendering: 'a'/'d' with no spaces; parse_word(render(w)) == w.
std::string render(const Word& w);

// Human-readable rendering with 'a'/'a†'.
std::string render_pretty(const Word& w);

// The word (a†a)^n: C,A repeated n times.
Word number_operator_word(int n);

// (number of annihilators, number of creators).
std::pair<std::size_t, std::size_t> word_counts(const Word& w);

} // namespace bno
