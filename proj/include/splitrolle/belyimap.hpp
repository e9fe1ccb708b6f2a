#pragma once

/**
 * @file belyimap.hpp
 * @brief Rational functions f(x) = prod (x - q_i)^{k_i} over Q that send every
 * q_i to 0 or infinity, send infinity to 1, and have no other critical points.
 *
 * The exponents are the Lagrange weights of the constant 1 at the points,
 * cleared to coprime integers. Then
 *
 *     f'/f = sum k_i / (x - q_i) = N / prod (x - q_j)
 *
 * for the constant N = sum k_i prod_{j != i}(x - q_j), so the only finite
 * critical points are the q_i with |k_i| >= 2.
 */

#include <splitrolle/factor.hpp>
#include <splitrolle/lagrange.hpp>
#include <splitrolle/poly.hpp>
#include <splitrolle/rational.hpp>
#include <splitrolle/verification.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace srolle {

/// The point at infinity of the projective line.
struct Infinity {
    friend bool operator==(const Infinity&, const Infinity&) = default;
};

using ProjectivePoint = std::variant<Rat, Infinity>;

inline bool is_infinity(const ProjectivePoint& p) { return std::holds_alternative<Infinity>(p); }

enum class CriticalValue { zero, one, infinity };

inline std::string_view to_string(CriticalValue v) {
    switch (v) {
    case CriticalValue::zero: return "0";
    case CriticalValue::one: return "1";
    case CriticalValue::infinity: return "infinity";
    }
    return "?";
}

struct CriticalPoint {
    ProjectivePoint location;
    CriticalValue value;
    Integer ramification_index;

    friend bool operator==(const CriticalPoint&, const CriticalPoint&) = default;
};

struct RationalFactor {
    Rat point;
    Integer exponent;

    friend bool operator==(const RationalFactor&, const RationalFactor&) = default;
};

/// prod (x - point)^exponent with nonzero exponents and strictly increasing points.
class FactoredRational {
public:
    FactoredRational() = default;

    explicit FactoredRational(std::vector<RationalFactor> factors) : factors_(std::move(factors)) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i].exponent == 0) throw std::invalid_argument("factored rational with zero exponent");
            if (i > 0 && !(factors_[i - 1].point < factors_[i].point))
                throw std::invalid_argument("factored rational points must be strictly increasing");
        }
    }

    const std::vector<RationalFactor>& factors() const { return factors_; }

    Integer exponent_sum() const {
        Integer s = 0;
        for (const auto& f : factors_) s += f.exponent;
        return s;
    }

    friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

private:
    std::vector<RationalFactor> factors_;
};

struct BelyiExponents {
    std::vector<Integer> exponents;
    Rat constant;
};

struct BelyiCertificate {
    std::vector<Rat> points;
    std::vector<Integer> exponents;
    Rat constant; // N; an integer only when the points are
    Integer degree;
    std::vector<CriticalPoint> critical_report;

    FactoredRational function() const {
        std::vector<RationalFactor> fs;
        for (std::size_t i = 0; i < points.size(); ++i) fs.push_back({points[i], exponents[i]});
        return FactoredRational(std::move(fs));
    }

    friend bool operator==(const BelyiCertificate&, const BelyiCertificate&) = default;
};

inline constexpr unsigned long kDenseBelyiDegreeLimit = 200;

/// Exponents k_i proportional to 1 / prod_{j != i}(q_i - q_j), cleared to a
/// coprime integer vector with N = sum k_i prod_{j != i}(x - q_j) > 0.
inline BelyiExponents belyi_exponents(std::span<const Rat> points) {
    if (points.size() < 2) throw std::invalid_argument("at least two points are required");
    require_distinct(points);
    const auto weights = lagrange_weights(Poly::constant(1), points);

    Integer common = 1;
    for (const auto& w : weights) common = lcm(common, w.den());
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& w : weights) {
        ints.emplace_back(w.num() * (common / w.den()));
        g = gcd(g, ints.back());
    }
    for (auto& k : ints) k /= g;

    const Poly cleared = cleared_combination<Integer>(points, ints);
    if (!cleared.is_constant() || cleared.is_zero())
        throw std::logic_error("cleared Lagrange combination of 1 is not a nonzero constant");
    Rat constant = cleared.leading();
    if (constant.sign() < 0) {
        for (auto& k : ints) k = -k;
        constant = -constant;
    }
    return {std::move(ints), std::move(constant)};
}

/// Numerator and denominator of fr as coprime dense polynomials.
inline std::pair<Poly, Poly> expand_factored(const FactoredRational& fr,
                                             unsigned long max_degree = 1UL << 16) {
    std::vector<SplitFactor> num, den;
    for (const auto& f : fr.factors()) {
        if (f.exponent > 0) num.push_back({f.point, f.exponent});
        else den.push_back({f.point, Integer(-f.exponent)});
    }
    return {FactoredSplit(std::move(num)).expand(max_degree), FactoredSplit(std::move(den)).expand(max_degree)};
}

/// Value of fr at a point of the projective line.
inline ProjectivePoint evaluate_projective(const FactoredRational& fr, const ProjectivePoint& at) {
    if (is_infinity(at)) {
        const Integer s = fr.exponent_sum();
        if (s == 0) return Rat(1);
        if (s > 0) return Infinity{};
        return Rat(0);
    }
    const Rat& x = std::get<Rat>(at);
    Rat value(1);
    for (const auto& f : fr.factors()) {
        if (f.point == x) {
            if (f.exponent > 0) return Rat(0);
            return Infinity{};
        }
    }
    for (const auto& f : fr.factors()) {
        const Rat base = x - f.point;
        const unsigned long e = to_ulong_checked(abs(f.exponent), "exponent");
        value *= f.exponent > 0 ? pow(base, e) : pow(base.inverse(), e);
    }
    return value;
}

/// Vanishing order of f - f(infinity) at infinity, with f(infinity) = 1, i.e.
/// the first p >= 1 with sum_i k_i q_i^p != 0 (log f(1/t) = -sum_p P_p t^p / p).
/// When the exponents do not sum to zero, infinity maps to 0 or infinity
/// with index |sum k_i|.
inline Integer ramification_at_infinity(const FactoredRational& fr) {
    const Integer s = fr.exponent_sum();
    if (s != 0) return abs(s);
    const auto& fs = fr.factors();
    std::vector<Rat> powers(fs.size(), Rat(1));
    for (std::size_t p = 1; p <= fs.size(); ++p) {
        Rat sum;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            powers[i] *= fs[i].point;
            sum += Rat(fs[i].exponent) * powers[i];
        }
        if (!sum.is_zero()) return Integer(static_cast<unsigned long>(p));
    }
    throw std::logic_error("power sums vanish identically for nonzero exponents");
}

/// Critical points with their values and ramification indices: every point
/// with |k_i| >= 2, then infinity when its index is at least 2.
inline std::vector<CriticalPoint> critical_report(const FactoredRational& fr) {
    std::vector<CriticalPoint> out;
    for (const auto& f : fr.factors()) {
        Integer idx = abs(f.exponent);
        if (idx >= 2)
            out.push_back({f.point, f.exponent > 0 ? CriticalValue::zero : CriticalValue::infinity, std::move(idx)});
    }
    Integer inf_idx = ramification_at_infinity(fr);
    if (inf_idx >= 2) {
        const Integer s = fr.exponent_sum();
        const CriticalValue v = s == 0 ? CriticalValue::one : s > 0 ? CriticalValue::infinity : CriticalValue::zero;
        out.push_back({Infinity{}, v, std::move(inf_idx)});
    }
    return out;
}

inline BelyiCertificate construct_belyi(std::span<const Rat> points) {
    std::vector<Rat> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    auto be = belyi_exponents(sorted);

    BelyiCertificate cert;
    cert.points = std::move(sorted);
    cert.exponents = std::move(be.exponents);
    cert.constant = std::move(be.constant);
    cert.degree = 0;
    for (const auto& k : cert.exponents)
        if (k > 0) cert.degree += k;
    cert.critical_report = critical_report(cert.function());
    return cert;
}

/// Total verifier for Belyi certificates.
inline VerificationReport verify_belyi(const BelyiCertificate& cert) {
    VerificationReport rep;

    std::string malformed;
    if (cert.points.size() < 2) malformed = "at least two points are required";
    else if (cert.points.size() != cert.exponents.size()) malformed = "point and exponent counts differ";
    else {
        for (std::size_t i = 0; i < cert.points.size(); ++i) {
            if (cert.exponents[i] == 0) malformed = "exponent at " + cert.points[i].str() + " is zero";
            if (i > 0 && !(cert.points[i - 1] < cert.points[i])) malformed = "points must be strictly increasing";
        }
    }
    rep.add("well_formed", malformed.empty(), malformed);
    if (!malformed.empty()) {
        for (const char* name : {"exponents_canonical", "exponent_sum_zero", "lagrange_identity",
                                 "critical_points_at_marked_points", "critical_points_dense", "degree",
                                 "critical_report", "riemann_hurwitz"})
            rep.skip(name, "malformed certificate");
        return rep;
    }

    const FactoredRational fr = cert.function();
    Integer g = 0, positive = 0, negative = 0;
    for (const auto& k : cert.exponents) {
        g = gcd(g, k);
        (k > 0 ? positive : negative) += abs(k);
    }
    rep.add("exponents_canonical", g == 1 && cert.constant.sign() > 0,
            "gcd " + g.get_str() + ", constant " + cert.constant.str());

    rep.add("exponent_sum_zero", positive == negative, "f(infinity) = 1 requires sum k_i = 0");

    const Poly big_g = cleared_combination<Integer>(cert.points, cert.exponents);
    rep.add("lagrange_identity", big_g == Poly::constant(cert.constant),
            "sum k_i prod_{j != i}(x - q_j) must equal the constant");

    // num' den - num den' = prod (x - q_i)^{|k_i| - 1} * G; its roots are
    // among the points exactly when G has no other roots.
    Poly rest = big_g;
    if (!rest.is_zero()) {
        for (const auto& q : cert.points) {
            const Poly lin = Poly::linear_root(q);
            for (;;) {
                auto [quo, r] = divrem(rest, lin);
                if (!r.is_zero() || rest.is_constant()) break;
                rest = std::move(quo);
            }
        }
    }
    rep.add("critical_points_at_marked_points", !rest.is_zero() && rest.is_constant(),
            "finite critical points must lie among the points");

    if (positive <= kDenseBelyiDegreeLimit && negative <= kDenseBelyiDegreeLimit) {
        const auto [num, den] = expand_factored(fr);
        const Poly wronskian = derivative(num) * den - num * derivative(den);
        Poly expected_part = Poly::constant(1);
        for (std::size_t i = 0; i < cert.points.size(); ++i) {
            const long e = static_cast<long>(Integer(abs(cert.exponents[i])).get_ui()) - 1;
            expected_part *= pow(Poly::linear_root(cert.points[i]), e);
        }
        auto [quo, r] = divrem(wronskian, expected_part);
        bool ok = r.is_zero() && !quo.is_zero() && quo.is_constant();
        const Poly diff = num - den;
        if (positive == negative && !diff.is_zero()) {
            const Integer dense_order(static_cast<unsigned long>(den.degree().value() - diff.degree().value()));
            ok = ok && dense_order == ramification_at_infinity(fr);
        }
        rep.add("critical_points_dense", ok, "expanded num' den - num den' and f - 1 at infinity");
    } else {
        rep.skip("critical_points_dense", "degree above dense limit");
    }

    rep.add("degree", cert.degree == std::max(positive, negative),
            "map degree is " + std::max(positive, negative).get_str());

    const auto recomputed = critical_report(fr);
    rep.add("critical_report", recomputed == cert.critical_report,
            "recomputed " + std::to_string(recomputed.size()) + " critical point(s), values in {0, 1, infinity}");

    Integer total = 0;
    for (const auto& c : cert.critical_report) total += c.ramification_index - 1;
    rep.add("riemann_hurwitz", total == 2 * cert.degree - 2,
            "sum of (e - 1) is " + total.get_str() + ", expected 2 deg - 2");
    return rep;
}

} // namespace srolle
