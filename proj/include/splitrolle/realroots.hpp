#pragma once

/**
 * @file realroots.hpp
 * @brief Exact real-root analysis: Cauchy bounds, Sturm chains, isolation
 * by bisection, interval refinement, simplest rationals and root
 * classification.
 *
 * Everything here works with exact rationals; no floating point is involved.
 */

#include <splitrolle/error.hpp>
#include <splitrolle/factor.hpp>
#include <splitrolle/poly.hpp>
#include <splitrolle/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace srolle {

/// Open interval (lo, hi) with lo < hi, or the exact point lo = hi.
struct Interval {
    Rat lo;
    Rat hi;

    Interval() = default;
    Interval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (hi < lo) throw std::invalid_argument("interval with hi < lo");
    }

    static Interval point(const Rat& p) { return Interval(p, p); }

    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }

    bool contains(const Rat& v) const { return is_point() ? v == lo : (lo < v && v < hi); }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Returns 1 + max_{i<n} |a_i| / |a_n|; every real root lies in (-B, B).
inline Rat cauchy_bound(const Poly& a) {
    if (a.is_constant()) throw std::domain_error("Cauchy bound of a constant");
    const auto& c = a.coefficients();
    const Rat lead = c.back().abs();
    Rat best;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) best = std::max(best, c[i].abs() / lead);
    return best + Rat(1);
}

/// Signed remainder sequence of a squarefree polynomial and its derivative.
class SturmChain {
public:
    explicit SturmChain(const Poly& a) {
        if (a.is_constant()) throw std::domain_error("Sturm chain of a constant");
        chain_.push_back(a);
        chain_.push_back(derivative(a));
        while (!chain_.back().is_constant()) {
            Poly r = divrem(chain_[chain_.size() - 2], chain_.back()).remainder;
            if (r.is_zero())
                throw std::invalid_argument("Sturm chain requires a squarefree polynomial");
            chain_.push_back(-r);
        }
    }

    const std::vector<Poly>& polys() const { return chain_; }
    const Poly& base() const { return chain_.front(); }

    /// Sign changes along the chain at `at`, zeros skipped.
    std::size_t variations(const Rat& at) const {
        std::size_t v = 0;
        int prev = 0;
        for (const auto& p : chain_) {
            const int s = p.sign_at(at);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

private:
    std::vector<Poly> chain_;
};

inline SturmChain sturm_chain(const Poly& a) { return SturmChain(a); }

/// Number of distinct real roots inside the open window (lo, hi).
/// Throws EndpointIsRoot when either endpoint is a root.
inline std::size_t count_real_roots(const SturmChain& chain, const Interval& window) {
    if (window.is_point()) return 0;
    if (chain.base().sign_at(window.lo) == 0 || chain.base().sign_at(window.hi) == 0)
        throw EndpointIsRoot("window endpoint is a root; nudge endpoints");
    return chain.variations(window.lo) - chain.variations(window.hi);
}

/// Isolates every real root of a squarefree polynomial in disjoint open
/// intervals with non-root rational endpoints, ascending.
inline std::vector<Interval> isolate_real_roots(const Poly& a) {
    const SturmChain chain(a);
    const Rat bound = cauchy_bound(a);

    std::vector<Interval> out;
    std::vector<Interval> pending{Interval(-bound, bound)};
    while (!pending.empty()) {
        Interval iv = pending.back();
        pending.pop_back();
        const std::size_t n = count_real_roots(chain, iv);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back(iv);
            continue;
        }
        Rat mid = (iv.lo + iv.hi) / Rat(2);
        // A midpoint landing on a root is replaced by a mediant, which stays
        // strictly inside; repeat until a non-root is found.
        Rat right = iv.hi;
        while (a.sign_at(mid) == 0) {
            right = mid;
            mid = mediant(iv.lo, right);
        }
        pending.emplace_back(mid, iv.hi);
        pending.emplace_back(iv.lo, mid);
    }
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return out;
}

/// Shrinks an isolating interval of a squarefree polynomial until
/// hi - lo <= width. Endpoints stay non-roots; the bracketed root never changes.
inline Interval refine_interval(const Poly& a, Interval iv, const Rat& width) {
    if (width.sign() <= 0) throw std::invalid_argument("refinement width must be positive");
    if (iv.is_point()) return iv;
    int slo = a.sign_at(iv.lo);
    if (slo == 0 || a.sign_at(iv.hi) == 0)
        throw EndpointIsRoot("isolating interval endpoint is a root");

    while (iv.width() > width) {
        const Rat mid = (iv.lo + iv.hi) / Rat(2);
        const int sm = a.sign_at(mid);
        if (sm == 0) {
            // mid is the isolated root itself; every other point is a non-root.
            iv = Interval((iv.lo + mid) / Rat(2), (mid + iv.hi) / Rat(2));
        } else if (sm == slo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

namespace detail {

/// Simplest rational in (lo, hi) for 0 <= lo < hi; hi == nullopt means +inf.
inline Rat simplest_positive(const Rat& lo, const std::optional<Rat>& hi) {
    const Integer next = lo.floor() + 1;
    if (!hi || Rat(next) < *hi) return Rat(next);
    // lo and hi share the integer part n = floor(lo); recurse on reciprocals
    // of the fractional parts.
    const Integer n = lo.floor();
    const Rat flo = lo - Rat(n);
    const Rat fhi = *hi - Rat(n);
    std::optional<Rat> upper;
    if (!flo.is_zero()) upper = flo.inverse();
    return Rat(n) + simplest_positive(fhi.inverse(), upper).inverse();
}

} // namespace detail

/// The rational in the open interval (lo, hi) with the smallest denominator,
/// and among those the smallest |numerator|. Stern-Brocot descent.
inline Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_rational_between needs lo < hi");
    if (lo.sign() < 0 && hi.sign() > 0) return Rat(0);
    if (hi.sign() <= 0) return -detail::simplest_positive(-hi, -lo);
    return detail::simplest_positive(lo, hi);
}

/// An isolated irrational real root together with the squarefree factor
/// (from the squarefree decomposition) that it is a simple root of. The
/// carrier makes later refinement possible.
struct IrrationalRoot {
    Interval interval;
    unsigned multiplicity;
    Poly carrier;

    friend bool operator==(const IrrationalRoot&, const IrrationalRoot&) = default;
};

struct RootClassification {
    std::size_t degree = 0;
    std::vector<RationalRoot> rational_roots;
    std::vector<IrrationalRoot> irrational_real;
    std::size_t nonreal_pair_count = 0;
    bool totally_real = false;
    bool irrational_simple = false;
};

namespace detail {

inline void halve(IrrationalRoot& r) {
    r.interval = refine_interval(r.carrier, r.interval, r.interval.width() / Rat(2));
}

} // namespace detail

inline RootClassification classify_roots(const Poly& a) {
    if (a.is_constant()) throw std::domain_error("root classification of a constant");
    RootClassification out;
    out.degree = a.degree().value();

    auto split = rational_roots(a);
    out.rational_roots = split.roots;

    if (!split.cofactor.is_constant()) {
        for (auto& [factor, mult] : squarefree_decomposition(split.cofactor)) {
            const auto intervals = isolate_real_roots(factor);
            const std::size_t real = intervals.size();
            const std::size_t deg = factor.degree().value();
            out.nonreal_pair_count += mult * ((deg - real) / 2);
            for (const auto& iv : intervals) out.irrational_real.push_back({iv, mult, factor});
        }
    }

    // Intervals from different squarefree factors may overlap each other or
    // cover a rational root; shrink until neither happens.
    auto& irr = out.irrational_real;
    for (bool changed = true; changed;) {
        changed = false;
        std::sort(irr.begin(), irr.end(),
                  [](const IrrationalRoot& x, const IrrationalRoot& y) { return x.interval.lo < y.interval.lo; });
        for (std::size_t i = 0; i < irr.size(); ++i) {
            for (const auto& r : out.rational_roots) {
                if (irr[i].interval.contains(r.root)) {
                    detail::halve(irr[i]);
                    changed = true;
                }
            }
            if (i + 1 < irr.size() && irr[i + 1].interval.lo < irr[i].interval.hi) {
                detail::halve(irr[i]);
                detail::halve(irr[i + 1]);
                changed = true;
            }
        }
    }

    out.totally_real = out.nonreal_pair_count == 0;
    out.irrational_simple = std::all_of(irr.begin(), irr.end(),
                                        [](const IrrationalRoot& r) { return r.multiplicity == 1; });
    return out;
}

} // namespace srolle
