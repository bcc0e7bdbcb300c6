#include "padicspec/parse.hpp"

#include <cctype>

#include "padicspec/errors.hpp"

namespace padicspec {

namespace {

constexpr unsigned long kMaxExponent = 512;

class Scanner {
public:
    explicit Scanner(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    std::size_t pos() const { return pos_; }
    void advance() { ++pos_; }

    mpz_class read_uint() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return mpz_class(s_.substr(start, pos_ - start), 10);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

// term := coef? ("*"? "T" ("^" uint)?)?   at least one part required
std::pair<mpz_class, unsigned long> parse_term(Scanner& sc) {
    sc.skip_ws();
    if (sc.eof()) throw ParseError(sc.pos(), "expected a term");

    bool have_coef = false;
    mpz_class coef = 1;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        coef = sc.read_uint();
        have_coef = true;
    }

    sc.skip_ws();
    if (!sc.eof() && sc.peek() == '*') {
        if (!have_coef) throw ParseError(sc.pos(), "'*' without a coefficient");
        sc.advance();
        sc.skip_ws();
        if (sc.eof() || sc.peek() != 'T')
            throw ParseError(sc.pos(), "expected 'T' after '*'");
    }

    if (!sc.eof() && sc.peek() == 'T') {
        sc.advance();
        unsigned long exp = 1;
        sc.skip_ws();
        if (!sc.eof() && sc.peek() == '^') {
            sc.advance();
            sc.skip_ws();
            std::size_t exp_pos = sc.pos();
            if (sc.eof() || !std::isdigit(static_cast<unsigned char>(sc.peek())))
                throw ParseError(sc.pos(), "expected an exponent after '^'");
            mpz_class e = sc.read_uint();
            if (e > kMaxExponent)
                throw ParseError(exp_pos, "exponent exceeds limit " + std::to_string(kMaxExponent));
            exp = e.get_ui();
        }
        return {coef, exp};
    }

    if (!have_coef) {
        throw ParseError(sc.pos(), std::string("unexpected character '") + sc.peek() + "'");
    }
    return {coef, 0};
}

} // namespace

IntPoly parse_poly(const std::string& text) {
    Scanner sc(text);
    sc.skip_ws();
    if (sc.eof()) throw ParseError(0, "empty polynomial");

    std::vector<mpz_class> acc;
    int sign = 1;
    if (sc.peek() == '+' || sc.peek() == '-') {
        sign = sc.peek() == '-' ? -1 : 1;
        sc.advance();
    }
    for (;;) {
        auto [coef, exp] = parse_term(sc);
        if (acc.size() <= exp) acc.resize(exp + 1, mpz_class(0));
        acc[exp] += sign * coef;
        sc.skip_ws();
        if (sc.eof()) break;
        char c = sc.peek();
        if (c != '+' && c != '-')
            throw ParseError(sc.pos(), std::string("expected '+' or '-', got '") + c + "'");
        sign = c == '-' ? -1 : 1;
        sc.advance();
    }
    return IntPoly(std::move(acc));
}

} // namespace padicspec
