#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over the rationals.
 *
 * Coefficients are stored in ascending order of power. The highest stored
 * coefficient is never zero; the zero polynomial stores nothing and has
 * degree negative infinity.
 */

#include <splitrolle/rational.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace srolle {

/// Polynomial degree with a distinguished negative-infinity value for zero.
/// Negative infinity orders below every finite degree and absorbs addition.
class Degree {
public:
    explicit Degree(std::size_t d) : value_(d) {}

    static Degree neg_infinity() { return Degree(); }

    bool is_neg_infinity() const { return !value_.has_value(); }

    std::size_t value() const {
        if (!value_) throw std::logic_error("degree of the zero polynomial has no value");
        return *value_;
    }

    std::string str() const { return value_ ? std::to_string(*value_) : "-inf"; }

    friend Degree operator+(const Degree& a, const Degree& b) {
        if (a.is_neg_infinity() || b.is_neg_infinity()) return neg_infinity();
        return Degree(*a.value_ + *b.value_);
    }

    friend bool operator==(const Degree&, const Degree&) = default;
    friend auto operator<=>(const Degree&, const Degree&) = default;

    friend bool operator==(const Degree& a, std::size_t b) { return a.value_ == b; }

private:
    Degree() = default;
    std::optional<std::size_t> value_;
};

class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }

    Poly(std::initializer_list<Rat> ascending) : c_(ascending) { trim(); }

    static Poly constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

    static Poly x() { return Poly{Rat(0), Rat(1)}; }

    static Poly monomial(const Rat& c, std::size_t k) {
        std::vector<Rat> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }

    /// x - r
    static Poly linear_root(const Rat& r) { return Poly{-r, Rat(1)}; }

    const std::vector<Rat>& coefficients() const { return c_; }

    Degree degree() const { return c_.empty() ? Degree::neg_infinity() : Degree(c_.size() - 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rat coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(); }

    const Rat& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Rat operator()(const Rat& at) const {
        Rat acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= at;
            acc += *it;
        }
        return acc;
    }

    int sign_at(const Rat& at) const { return (*this)(at).sign(); }

    Poly monic() const {
        if (is_zero()) throw std::domain_error("monic of the zero polynomial");
        Poly r = *this;
        const Rat lc = leading();
        for (auto& c : r.c_) c /= lc;
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Poly& operator*=(const Rat& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// Integer power by repeated squaring. Negative exponents are rejected.
inline Poly pow(const Poly& base, long e) {
    if (e < 0) throw std::domain_error("negative exponent in polynomial power");
    Poly result = Poly::constant(1);
    Poly b = base;
    for (unsigned long k = static_cast<unsigned long>(e); k != 0; k >>= 1) {
        if (k & 1) result *= b;
        if (k > 1) b *= b;
    }
    return result;
}

inline Poly derivative(const Poly& a) {
    const auto& c = a.coefficients();
    if (c.size() <= 1) return {};
    std::vector<Rat> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * Rat(i);
    return Poly(std::move(d));
}

struct DivRem {
    Poly quotient;
    Poly remainder;
};

inline DivRem divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};

    const std::size_t db = b.degree().value();
    std::vector<Rat> rem = a.coefficients();
    std::vector<Rat> quo(rem.size() - db);
    const auto& bc = b.coefficients();
    const Rat& lc = b.leading();

    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rat& top = rem[k + db];
        if (top.is_zero()) continue;
        Rat q = top / lc;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
        quo[k] = std::move(q);
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

/// Quotient a / b, which must be exact.
inline Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

inline bool divides(const Poly& d, const Poly& a) { return divrem(a, d).remainder.is_zero(); }

namespace detail {

using IntCoeffs = std::vector<Integer>;

inline void trim(IntCoeffs& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

/// Divides out the content and makes the leading coefficient positive.
inline void make_primitive(IntCoeffs& v) {
    trim(v);
    if (v.empty()) return;
    Integer g = 0;
    for (const auto& c : v) g = gcd(g, c);
    if (v.back() < 0) g = -g;
    for (auto& c : v) c /= g;
}

/// Writes a = content * primitive with integer coprime coefficients and a
/// positive leading coefficient. The zero polynomial maps to an empty list.
inline std::pair<Rat, IntCoeffs> primitive_part(const Poly& a) {
    if (a.is_zero()) return {Rat(), {}};
    Integer denom = 1;
    for (const auto& c : a.coefficients()) denom = lcm(denom, c.den());
    IntCoeffs ints;
    ints.reserve(a.coefficients().size());
    for (const auto& c : a.coefficients()) ints.push_back(Integer(c.num() * (denom / c.den())));
    IntCoeffs prim = ints;
    make_primitive(prim);
    Rat content = Rat(ints.back()) / Rat(prim.back());
    return {content, prim};
}

inline Poly from_integers(const IntCoeffs& v) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (const auto& x : v) c.emplace_back(x);
    return Poly(std::move(c));
}

/// lc(b)^k * a mod b, computed fraction-free.
inline IntCoeffs pseudo_remainder(IntCoeffs a, const IntCoeffs& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

} // namespace detail

/// Monic greatest common divisor. gcd(a, 0) is monic(a); gcd(0, 0) throws.
inline Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (b.is_zero()) return a.monic();
    if (a.is_zero()) return b.monic();

    auto u = detail::primitive_part(a).second;
    auto v = detail::primitive_part(b).second;
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        auto r = detail::pseudo_remainder(u, v);
        detail::make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    return detail::from_integers(u).monic();
}

/// Descending-power debug rendering; the CLI owns the canonical text format.
inline std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    const auto& c = p.coefficients();
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c[i] << ")";
        if (i > 0) os << "*x^" << i;
        first = false;
    }
    return os;
}

} // namespace srolle
