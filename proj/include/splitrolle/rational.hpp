#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and canonical rationals.
 *
 * Integer is GMP's mpz_class. Rat wraps mpq_class and keeps it canonical:
 * positive denominator, numerator and denominator coprime, zero as 0/1.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace srolle {

using Integer = mpz_class;

namespace detail {

inline bool is_decimal_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace detail

/// Parses an optionally signed decimal integer. No whitespace, no '+'.
inline Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!detail::is_decimal_digits(digits))
        throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    return Integer(std::string(text), 10);
}

class Rat {
public:
    Rat() = default;

    template <std::signed_integral T>
    Rat(T v) : value_(static_cast<long>(v)) {}

    template <std::unsigned_integral T>
    Rat(T v) : value_(static_cast<unsigned long>(v)) {}

    Rat(const Integer& v) : value_(v) {}

    Rat(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit Rat(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    /// Accepts "p" or "p/q" with an optional leading '-' on p; q > 0.
    /// Non-reduced input such as "2/4" is accepted and reduced.
    static Rat parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rat(parse_integer(text));
        auto den_text = text.substr(slash + 1);
        if (!detail::is_decimal_digits(den_text))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        return Rat(parse_integer(text.substr(0, slash)), parse_integer(den_text));
    }

    const Integer& num() const { return value_.get_num(); }
    const Integer& den() const { return value_.get_den(); }
    const mpq_class& mpq() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return den() == 1; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Integer floor() const {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return q;
    }

    Integer ceil() const {
        Integer q;
        mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return q;
    }

    Rat inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rat(den(), num());
    }

    /// Canonical text: "p" when the denominator is 1, else "p/q".
    std::string str() const { return value_.get_str(10); }

    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) {
        Rat r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class value_;
};

/// r^e for a nonnegative machine exponent.
inline Rat pow(const Rat& base, unsigned long e) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
    return Rat(n, d);
}

/// Mediant (a+c)/(b+d) of a/b and c/d; lies strictly between distinct inputs.
inline Rat mediant(const Rat& a, const Rat& b) {
    return Rat(Integer(a.num() + b.num()), Integer(a.den() + b.den()));
}

inline Integer integer_gcd(const Integer& a, const Integer& b) { return gcd(a, b); }
inline Integer integer_lcm(const Integer& a, const Integer& b) { return lcm(a, b); }

/// Converts to unsigned long, throwing if the value does not fit.
inline unsigned long to_ulong_checked(const Integer& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p())
        throw std::overflow_error(std::string(what) + " out of machine range");
    return v.get_ui();
}

} // namespace srolle
