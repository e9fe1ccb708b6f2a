#pragma once

/**
 * @file rollewitness.hpp
 * @brief Builds and checks split witnesses: for f whose irrational roots are
 * real and simple, a polynomial F = (prod (x - q_i)^{k_i})^m with rational
 * q_i and positive integers k_i, m such that f divides F'.
 *
 * Construction outline:
 *  1. Classify the roots of f; refuse if an irrational root is nonreal or
 *     repeated.
 *  2. Interleave rational nodes with the roots (rational roots of f are
 *     forced to be nodes; separators are simplest rationals).
 *  3. Interpolate the monic polynomial g whose roots are the targets at the
 *     nodes. The interleaving makes every Lagrange weight positive, so a
 *     common denominator turns them into positive integers k_i and
 *     P = prod (x - q_i)^{k_i} has P' = prod (x - q_i)^{k_i - 1} * scale * g.
 *  4. Raise P to the least power m that covers the multiplicities of the
 *     rational roots of f.
 *
 * F is never expanded during construction. Verification works from the
 * factored identity F' = m prod (x - q_i)^{m k_i - 1} G(x) with
 * G = sum k_i prod_{j != i}(x - q_j), and additionally expands F densely
 * when its degree is small.
 */

#include <splitrolle/error.hpp>
#include <splitrolle/factor.hpp>
#include <splitrolle/lagrange.hpp>
#include <splitrolle/poly.hpp>
#include <splitrolle/rational.hpp>
#include <splitrolle/realroots.hpp>
#include <splitrolle/verification.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace srolle {

/// A root that the interpolant must vanish at: either an exact rational
/// point (an inserted separator) or an irrational root isolated by `where`.
/// `carrier` is squarefree with exactly one root in `where`.
struct RootTarget {
    Interval where;
    Poly carrier;

    bool is_point() const { return where.is_point(); }

    friend bool operator==(const RootTarget&, const RootTarget&) = default;
};

struct AlternationPlan {
    std::vector<Rat> nodes;          // q_1 < ... < q_{n+1}
    std::vector<RootTarget> targets; // interleaved strictly between nodes
    Poly interpolant;                // monic, roots exactly the targets
};

struct WitnessOptions {
    /// Largest denominator allowed for any inserted interleaving rational.
    std::optional<Integer> max_denominator;
};

struct RolleWitness {
    Poly f;
    std::vector<Rat> nodes;
    std::vector<Integer> exponents;
    Integer power = 1;
    Rat scale = Rat(1);

    friend bool operator==(const RolleWitness&, const RolleWitness&) = default;
};

struct LagrangeExponents {
    std::vector<Rat> weights;
    std::vector<Integer> exponents;
    Rat scale;
};

/// Largest dense degree the verifier is willing to expand F to.
inline constexpr unsigned long kDenseWitnessDegreeLimit = 200;

namespace detail {

inline void halve(RootTarget& t) {
    if (t.is_point()) throw std::logic_error("cannot refine an exact target");
    t.where = refine_interval(t.carrier, t.where, t.where.width() / Rat(2));
}

/// Simplest rational s in (lo, t) for the root t isolated by `target`,
/// refining the target until s is certainly left of it.
inline Rat simplest_left_of(const Rat& lo, RootTarget& target) {
    for (;;) {
        Rat s = simplest_rational_between(lo, target.where.hi);
        if (s <= target.where.lo) return s;
        halve(target);
    }
}

inline Rat simplest_right_of(RootTarget& target, const Rat& hi) {
    for (;;) {
        Rat s = simplest_rational_between(target.where.lo, hi);
        if (s >= target.where.hi) return s;
        halve(target);
    }
}

/// Simplest rational strictly between the roots isolated by a and b (a left of b).
inline Rat simplest_between(RootTarget& a, RootTarget& b) {
    for (;;) {
        Rat s = simplest_rational_between(a.where.lo, b.where.hi);
        if (a.where.hi <= s && s <= b.where.lo) return s;
        if (s < a.where.hi) halve(a);
        else halve(b);
    }
}

} // namespace detail

/// Interleaves rational nodes with the roots of f. Rational roots of f become
/// mandatory nodes, irrational roots become targets. Adjacent targets get a
/// separator node, adjacent nodes get a separator rational target, and the
/// sequence is closed with boundary nodes outside the Cauchy window when it
/// would otherwise start or end with a target. f must have positive leading
/// coefficient.
inline AlternationPlan build_alternation(const Poly& f, const RootClassification& cls,
                                         const WitnessOptions& opts = {}) {
    if (!cls.totally_real || !cls.irrational_simple) throw NotTotallyRealSimple();
    if (f.is_constant()) throw DegenerateInput("constant polynomial has no Rolle witness");
    if (f.leading().sign() < 0) throw std::invalid_argument("build_alternation expects a positive leading coefficient");

    struct Item {
        bool is_node;
        Rat node;
        RootTarget target;
        const Rat& key() const { return is_node ? node : target.where.lo; }
    };
    std::vector<Item> items;
    for (const auto& r : cls.rational_roots) items.push_back({true, r.root, {}});
    for (const auto& r : cls.irrational_real) items.push_back({false, Rat(), {r.interval, r.carrier}});
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.key() != b.key()) return a.key() < b.key();
        return a.is_node && !b.is_node;
    });
    if (items.empty()) throw std::logic_error("totally real polynomial without real roots");

    auto capped = [&](Rat r) {
        if (opts.max_denominator && r.den() > *opts.max_denominator)
            throw DenominatorCapExceeded("interleaving rational " + r.str() + " exceeds denominator cap " +
                                         opts.max_denominator->get_str());
        return r;
    };

    // Separators are computed first; they may refine the target intervals.
    const Rat outer = cauchy_bound(f) + Rat(1);
    std::optional<Rat> left_boundary, right_boundary;
    if (!items.front().is_node) left_boundary = capped(detail::simplest_left_of(-outer, items.front().target));
    if (!items.back().is_node) right_boundary = capped(detail::simplest_right_of(items.back().target, outer));

    std::vector<std::optional<Rat>> separators(items.size());
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
        Item& a = items[i];
        Item& b = items[i + 1];
        if (a.is_node && b.is_node)
            separators[i] = capped(simplest_rational_between(a.node, b.node));
        else if (!a.is_node && !b.is_node)
            separators[i] = capped(detail::simplest_between(a.target, b.target));
    }

    AlternationPlan plan;
    std::vector<Rat> inserted_targets;
    if (left_boundary) plan.nodes.push_back(*left_boundary);
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i].is_node)
            plan.nodes.push_back(items[i].node);
        else
            plan.targets.push_back(items[i].target);
        if (!separators[i]) continue;
        if (items[i].is_node) {
            inserted_targets.push_back(*separators[i]);
            plan.targets.push_back({Interval::point(*separators[i]), Poly::linear_root(*separators[i])});
        } else {
            plan.nodes.push_back(*separators[i]);
        }
    }
    if (right_boundary) plan.nodes.push_back(*right_boundary);

    const Poly irrational_part = rational_roots(f).cofactor;
    plan.interpolant = irrational_part.is_constant() ? Poly::constant(1) : squarefree_part(irrational_part);
    for (const auto& s : inserted_targets) plan.interpolant *= Poly::linear_root(s);
    return plan;
}

/// Checks the plan invariants against f; returns an empty string when they
/// hold, otherwise a description of the first defect.
inline std::string plan_defect(const AlternationPlan& plan, const Poly& f) {
    const auto& nodes = plan.nodes;
    const auto& targets = plan.targets;
    if (nodes.size() != targets.size() + 1) return "node count must exceed target count by one";
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto& w = targets[i].where;
        const bool left_ok = w.is_point() ? nodes[i] < w.lo : nodes[i] <= w.lo;
        const bool right_ok = w.is_point() ? w.hi < nodes[i + 1] : w.hi <= nodes[i + 1];
        if (!left_ok || !right_ok) return "alternation broken at target " + std::to_string(i);
    }
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        if (!(nodes[i] < nodes[i + 1])) return "nodes not strictly increasing";
    const Poly& g = plan.interpolant;
    if (g.is_zero() || g.degree() != targets.size()) return "interpolant degree differs from target count";
    if (g.leading().sign() <= 0) return "interpolant leading coefficient not positive";
    for (const auto& t : targets) {
        if (t.is_point()) {
            if (!g(t.where.lo).is_zero()) return "interpolant does not vanish at " + t.where.lo.str();
        } else if (!divides(t.carrier, g) ||
                   count_real_roots(SturmChain(t.carrier), t.where) != 1) {
            return "irrational target not isolated by its interval";
        }
    }
    for (const auto& r : rational_roots(f).roots)
        if (!std::binary_search(nodes.begin(), nodes.end(), r.root))
            return "rational root " + r.root.str() + " of f is not a node";
    return {};
}

/// Positive integer exponents from the Lagrange weights of the interpolant.
/// Throws std::logic_error if a weight is not strictly positive, which can
/// only happen for a plan that breaks alternation.
inline LagrangeExponents lagrange_exponents(const AlternationPlan& plan) {
    LagrangeExponents out;
    out.weights = lagrange_weights(plan.interpolant, plan.nodes);
    Integer common = 1;
    for (const auto& w : out.weights) {
        if (w.sign() <= 0) throw std::logic_error("broken alternation plan: nonpositive Lagrange weight");
        common = lcm(common, w.den());
    }
    Integer g = 0;
    std::vector<Integer> ints;
    for (const auto& w : out.weights) {
        ints.emplace_back(w.num() * (common / w.den()));
        g = gcd(g, ints.back());
    }
    for (auto& k : ints) k /= g;
    out.exponents = std::move(ints);
    out.scale = Rat(common, g);
    return out;
}

/// Least m >= 1 with m k_r - 1 >= mu_r for every rational root r of f with
/// multiplicity mu_r. Each such r must be a node.
inline Integer witness_power(const Poly& f, std::span<const Rat> nodes, std::span<const Integer> exponents) {
    if (nodes.size() != exponents.size()) throw std::invalid_argument("node and exponent counts differ");
    Integer m = 1;
    for (const auto& r : rational_roots(f).roots) {
        auto it = std::find(nodes.begin(), nodes.end(), r.root);
        if (it == nodes.end())
            throw std::invalid_argument("rational root " + r.root.str() + " of f is not among the nodes");
        const Integer& k = exponents[static_cast<std::size_t>(it - nodes.begin())];
        if (k <= 0) throw std::invalid_argument("exponents must be positive");
        Integer need = (Integer(r.multiplicity) + k) / k; // ceil((mu + 1) / k)
        if (need > m) m = need;
    }
    return m;
}

/// G(x) = sum_i k_i prod_{j != i}(x - q_j); P' = prod (x - q_i)^{k_i - 1} G.
inline Poly log_derivative_numerator(std::span<const Rat> nodes, std::span<const Integer> exponents) {
    return cleared_combination<Integer>(nodes, exponents);
}

/// Whether f divides the derivative of (prod (x - q_i)^{k_i})^m, decided from
/// the factored form F' = m prod (x - q_i)^{m k_i - 1} G: strip from f the
/// linear factors that the power part can absorb; the rest must divide G.
inline bool divides_derivative_of_power(const Poly& f, std::span<const Rat> nodes,
                                        std::span<const Integer> exponents, const Integer& power) {
    if (f.is_zero()) throw std::invalid_argument("divisibility by the zero polynomial");
    const Poly g = log_derivative_numerator(nodes, exponents);
    Poly rest = f.monic();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Integer available = power * exponents[i] - 1;
        const Poly lin = Poly::linear_root(nodes[i]);
        for (Integer t = 0; t < available; ++t) {
            auto [q, r] = divrem(rest, lin);
            if (!r.is_zero()) break;
            rest = std::move(q);
        }
    }
    return divides(rest, g);
}

/// F in factored form: roots q_i with multiplicities m k_i.
inline FactoredSplit witness_polynomial(const RolleWitness& w) {
    std::vector<SplitFactor> factors;
    for (std::size_t i = 0; i < w.nodes.size(); ++i)
        factors.push_back({w.nodes[i], Integer(w.power * w.exponents[i])});
    return FactoredSplit(std::move(factors));
}

inline RolleWitness construct_witness(const Poly& f, const WitnessOptions& opts = {}) {
    if (f.is_constant()) throw DegenerateInput("constant polynomial has no Rolle witness");
    const RootClassification cls = classify_roots(f);
    if (!cls.totally_real)
        throw NotTotallyRealSimple("irrational roots not all real and simple (" +
                                   std::to_string(cls.nonreal_pair_count) + " nonreal pair(s))");
    if (!cls.irrational_simple)
        throw NotTotallyRealSimple("irrational roots not all real and simple (repeated irrational root)");

    const Poly normalized = f.leading().sign() < 0 ? -f : f;
    const AlternationPlan plan = build_alternation(normalized, cls, opts);
    const LagrangeExponents le = lagrange_exponents(plan);
    Integer m = witness_power(normalized, plan.nodes, le.exponents);
    return RolleWitness{f, plan.nodes, le.exponents, std::move(m), le.scale};
}

/// Total verifier: every check is reported, nothing throws for bad input.
inline VerificationReport verify_witness(const RolleWitness& w) {
    VerificationReport rep;

    std::string malformed;
    if (w.f.is_constant()) malformed = "f must be nonconstant";
    else if (w.nodes.empty()) malformed = "no nodes";
    else if (w.nodes.size() != w.exponents.size()) malformed = "node and exponent counts differ";
    else if (w.power < 1) malformed = "power must be a positive integer";
    else
        for (std::size_t i = 0; i + 1 < w.nodes.size(); ++i)
            if (!(w.nodes[i] < w.nodes[i + 1])) malformed = "nodes must be strictly increasing";
    rep.add("well_formed", malformed.empty(), malformed);
    const char* later[] = {"exponents_positive", "exponents_canonical", "divides_derivative",
                           "divides_derivative_dense", "rolle_structure", "degree_bookkeeping",
                           "scale_consistent", "power_minimal"};
    if (!malformed.empty()) {
        for (const char* name : later) rep.skip(name, "malformed witness");
        return rep;
    }

    const bool positive =
        std::all_of(w.exponents.begin(), w.exponents.end(), [](const Integer& k) { return k > 0; });
    rep.add("exponents_positive", positive, positive ? "F splits over Q" : "an exponent is not positive");
    if (!positive) {
        for (std::size_t i = 1; i < std::size(later); ++i) rep.skip(later[i], "nonpositive exponent");
        return rep;
    }

    Integer g = 0, sum = 0;
    for (const auto& k : w.exponents) {
        g = gcd(g, k);
        sum += k;
    }
    rep.add("exponents_canonical", g == 1, "gcd of exponents is " + g.get_str());

    rep.add("divides_derivative", divides_derivative_of_power(w.f, w.nodes, w.exponents, w.power),
            "f | F' from the factored form of F'");

    const Integer degree_f = w.power * sum;
    if (degree_f <= kDenseWitnessDegreeLimit) {
        const Poly big_f = witness_polynomial(w).expand();
        const bool ok = divrem(derivative(big_f), w.f).remainder.is_zero();
        rep.add("divides_derivative_dense", ok, "F expanded to degree " + degree_f.get_str());
    } else {
        rep.skip("divides_derivative_dense", "deg F = " + degree_f.get_str() + " above dense limit");
    }

    const Poly big_g = log_derivative_numerator(w.nodes, w.exponents);
    bool alternates = big_g.degree() == w.nodes.size() - 1;
    int prev = 0;
    for (const auto& q : w.nodes) {
        const int s = big_g.sign_at(q);
        if (s == 0 || s == prev) alternates = false;
        prev = s;
    }
    rep.add("rolle_structure", alternates, "G changes sign across every gap between consecutive nodes");

    Integer deriv_degree = big_g.is_zero() ? Integer(-1) : Integer(big_g.degree().value());
    for (const auto& k : w.exponents) deriv_degree += w.power * k - 1;
    rep.add("degree_bookkeeping", deriv_degree == degree_f - 1,
            "deg F' = " + deriv_degree.get_str() + ", deg F = " + degree_f.get_str());

    rep.add("scale_consistent", w.scale == Rat(sum), "G / scale must be monic");

    try {
        const Integer m = witness_power(w.f, w.nodes, w.exponents);
        rep.add("power_minimal", m == w.power, "least admissible power is " + m.get_str());
    } catch (const std::invalid_argument& e) {
        rep.add("power_minimal", false, e.what());
    }
    return rep;
}

} // namespace srolle
