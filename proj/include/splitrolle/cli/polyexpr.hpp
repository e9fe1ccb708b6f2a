#pragma once

/**
 * @file polyexpr.hpp
 * @brief Polynomial expressions in x: recursive-descent parser and canonical
 * formatter.
 *
 * Grammar (whitespace ignored):
 *
 *     expr    := term (('+' | '-') term)*
 *     term    := unary (['*'] unary)*       implicit '*' only before 'x' or '('
 *     unary   := ('+' | '-') unary | power
 *     power   := primary ['^' integer]
 *     primary := number | 'x' | '(' expr ')'
 *     number  := digits ['/' digits]
 *
 * Division appears only inside numeric literals.
 */

#include <splitrolle/poly.hpp>
#include <splitrolle/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace srolle::cli {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                       text_[pos_] == '\r'))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    Poly expr() {
        Poly acc = term();
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

    Poly term() {
        Poly acc = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= unary();
            } else if (c == 'x' || c == '(') {
                acc *= unary();
            } else if (c == '/') {
                fail("division is only allowed inside numeric literals");
            } else {
                return acc;
            }
        }
    }

    Poly unary() {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (peek() != '^') return base;
        ++pos_;
        const char c = peek();
        if (c == '-') fail("negative exponent");
        if (!is_digit(c)) fail("exponent must be a nonnegative integer");
        const std::size_t start = pos_;
        Integer e = digits();
        skip_ws();
        if (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '.'))
            fail("non-integer exponent");
        if (!e.fits_slong_p() || e > 4096) throw ParseError("exponent too large", start);
        return pow(base, e.get_si());
    }

    Poly primary() {
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            return Poly::x();
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (is_digit(c)) return Poly::constant(number());
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Rat number() {
        Integer num = digits();
        if (peek() != '/') return Rat(num);
        ++pos_;
        if (!is_digit(peek())) fail("expected denominator after '/'");
        const std::size_t at = pos_;
        Integer den = digits();
        if (den == 0) throw ParseError("zero denominator", at);
        return Rat(num, den);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Poly parse_poly(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Comma-separated ascending coefficients, e.g. "-2,0,1" for x^2 - 2.
inline Poly parse_coefficients(std::string_view text) {
    std::vector<Rat> coeffs;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        std::string item(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        std::erase_if(item, [](char c) { return c == ' ' || c == '\t'; });
        try {
            coeffs.push_back(Rat::parse(item));
        } catch (const std::exception& e) {
            throw ParseError("bad coefficient '" + item + "'", start);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Poly(std::move(coeffs));
}

/// Canonical descending rendering, e.g. "x^2 - 2", "1/2*x + 1/3", "-x^3 + x".
inline std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    const auto& c = p.coefficients();
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        const Rat& coef = c[i];
        if (coef.is_zero()) continue;
        const bool negative = coef.sign() < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const Rat mag = coef.abs();
        if (i == 0) {
            out += mag.str();
            continue;
        }
        if (mag != Rat(1)) out += mag.str() + "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace srolle::cli
