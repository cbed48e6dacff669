#include "bno/word.hpp"

#include "bno/errors.hpp"

#include <cstdint>
#include <limits>

namespace bno {

namespace {

// Expanded words are capped so a pathological exponent tower cannot
// exhaust memory before any enumeration guard is consulted.
constexpr std::size_t kMaxWordLength = std::size_t{1} << 22;

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Word parse() {
        std::vector<Letter> out;
        skip_ws();
        if (done()) return Word(std::move(out)); // empty word is valid
        parse_word_into(out);
        skip_ws();
        if (!done()) fail("unexpected character '" + std::string(1, peek()) + "'");
        return Word(std::move(out));
    }

private:
    void parse_word_into(std::vector<Letter>& out) {
        bool any = false;
        while (true) {
            skip_ws();
            if (done() || peek() == ')') break;
            parse_factor_into(out);
            any = true;
        }
        if (!any) fail("expected a letter or '('");
    }

    void parse_factor_into(std::vector<Letter>& out) {
        char c = peek();
        if (c == '(') {
            advance();
            std::vector<Letter> group;
            parse_word_into(group);
            skip_ws();
            if (done() || peek() != ')') fail("expected ')'");
            advance();
            skip_ws();
            if (done() || peek() != '^') fail("expected '^' after ')'");
            advance();
            append_repeated(out, group, parse_exponent());
        } else if (c == 'a' || c == 'd') {
            advance();
            Letter letter = (c == 'a') ? Letter::Annihilator : Letter::Creator;
            skip_ws_before_caret();
            if (!done() && peek() == '^') {
                advance();
                append_repeated(out, {letter}, parse_exponent());
            } else {
                out.push_back(letter);
                check_length(out.size());
            }
        } else {
            fail("expected a letter or '('");
        }
    }

    std::uint32_t parse_exponent() {
        skip_ws();
        if (done() || peek() < '0' || peek() > '9') fail("expected a positive integer exponent");
        std::size_t start = pos_;
        std::uint64_t value = 0;
        while (!done() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (value > std::numeric_limits<std::int32_t>::max())
                fail_at("exponent exceeds 32-bit bound", start + 1);
            advance();
        }
        if (value == 0) fail_at("exponent must be positive", start + 1);
        return static_cast<std::uint32_t>(value);
    }

    void append_repeated(std::vector<Letter>& out, const std::vector<Letter>& group,
                         std::uint32_t times) {
        check_length(out.size() + static_cast<std::size_t>(group.size()) * times);
        for (std::uint32_t i = 0; i < times; ++i)
            out.insert(out.end(), group.begin(), group.end());
    }

    void check_length(std::size_t n) {
        if (n > kMaxWordLength)
            fail("expanded word exceeds maximum length " + std::to_string(kMaxWordLength));
    }

    // '^' binds to the letter across whitespace ("a ^2" == "a^2").
    void skip_ws_before_caret() {
        std::size_t save = pos_;
        skip_ws();
        if (done() || peek() != '^') pos_ = save;
    }

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() { ++pos_; }
    void skip_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r'))
            advance();
    }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_ + 1); }
    [[noreturn]] static void fail_at(const std::string& msg, std::size_t offset) {
        throw parse_error(msg, offset);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

Word parse_word(const std::string& text) { return Parser(text).parse(); }

std::string render(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Letter l : w.letters()) out.push_back(l == Letter::Annihilator ? 'a' : 'd');
    return out;
}

std::string render_pretty(const Word& w) {
    std::string out;
    for (Letter l : w.letters()) out += (l == Letter::Annihilator) ? "a" : "a†";
    return out;
}

Word number_operator_word(int n) {
    if (n < 1) throw domain_error("number_operator_word requires n >= 1");
    std::vector<Letter> letters;
    letters.reserve(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        letters.push_back(Letter::Creator);
        letters.push_back(Letter::Annihilator);
    }
    return Word(std::move(letters));
}

std::pair<std::size_t, std::size_t> word_counts(const Word& w) {
    std::size_t a = 0, c = 0;
    for (Letter l : w.letters()) (l == Letter::Annihilator ? a : c) += 1;
    return {a, c};
}

} // namespace bno
