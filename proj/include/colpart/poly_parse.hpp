#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "polynomial.hpp"

namespace colpart {

namespace detail {

// Recursive-descent reader for integer polynomials in x and y:
//
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := power { ['*'] power }        juxtaposition multiplies
//   power   := primary [ '^' digits ]
//   primary := digits | 'x' | 'y' | '(' expr ')'
//
// so "2 x y (1 + 3 y - x (3 - 7 y + 4 y^2))" reads the way it is typeset.
class PolyReader {
public:
    explicit PolyReader(std::string_view text) : text_(text) {}

    XYPolynomial read() {
        XYPolynomial p = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected character");
        }
        return p;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw parse_error(why + " at offset " + std::to_string(pos_) + " in polynomial '" + std::string(text_) + "'");
    }

    static bool starts_primary(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
    }

    XYPolynomial expr() {
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = text_[pos_++] == '-';
        }
        XYPolynomial acc = term();
        if (negate) {
            acc = -acc;
        }
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    XYPolynomial term() {
        XYPolynomial acc = power();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * power();
            } else if (starts_primary(c)) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    XYPolynomial power() {
        XYPolynomial base = primary();
        if (peek() != '^') {
            return base;
        }
        ++pos_;
        skip_space();
        const std::string digits = read_digits();
        if (digits.empty()) {
            fail("exponent expected");
        }
        const unsigned long e = std::stoul(digits);
        XYPolynomial out(YPolynomial(BigInt(1)));
        for (unsigned long i = 0; i < e; ++i) {
            out = out * base;
        }
        return out;
    }

    XYPolynomial primary() {
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            return x_var();
        }
        if (c == 'y') {
            ++pos_;
            return XYPolynomial(y_var());
        }
        if (c == '(') {
            ++pos_;
            XYPolynomial inner = expr();
            if (peek() != ')') {
                fail("')' expected");
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return XYPolynomial(YPolynomial(BigInt(read_digits())));
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline XYPolynomial parse_xy_polynomial(std::string_view text) { return detail::PolyReader(text).read(); }

// Same grammar; rejects any occurrence of x.
inline YPolynomial parse_y_polynomial(std::string_view text) {
    const XYPolynomial p = parse_xy_polynomial(text);
    if (p.degree() > 0) {
        throw parse_error("polynomial in y expected, found x in '" + std::string(text) + "'");
    }
    return p.coeff(0);
}

} // namespace colpart
