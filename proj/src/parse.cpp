#include "approxjac/parse.hpp"

#include <cctype>
#include <string>

namespace approxjac {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    BiPoly parse() {
        BiPoly r = expr();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return r;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int depth_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    BiPoly expr() {
        if (++depth_ > 200) fail("nesting too deep");
        BiPoly acc;
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else break;
        }
        --depth_;
        return acc;
    }

    BiPoly term() {
        BiPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    BiPoly factor() {
        BiPoly b = base();
        if (accept('^')) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
            const std::string e = digits();
            skip();
            if (pos_ < s_.size() && (s_[pos_] == '/' || s_[pos_] == '.')) fail("fractional exponent");
            if (e.size() > 4) fail("exponent too large");
            b = b.pow(std::stoi(e));
        }
        return b;
    }

    BiPoly base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BiPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return BiPoly::x();
        }
        if (c == 'y') {
            ++pos_;
            return BiPoly::y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    fail("expected denominator digits");
                const std::string den = digits();
                mpz_class d(den);
                if (d == 0) fail("zero denominator");
                mpq_class q{mpz_class(num), d};
                q.canonicalize();
                return BiPoly(q);
            }
            return BiPoly(mpq_class(mpz_class(num)));
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

}  // namespace

BiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace approxjac
