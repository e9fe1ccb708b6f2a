#pragma once

/**
 * @file factor.hpp
 * @brief Squarefree decomposition, rational-root extraction and split
 * polynomials held in factored form.
 */

#include <splitrolle/poly.hpp>
#include <splitrolle/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace srolle {

namespace detail {

struct PrimePower {
    Integer prime;
    unsigned exponent;
};

inline Integer pollard_brent(const Integer& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        const unsigned long m = 64;
        for (unsigned long r = 1; g == 1; r <<= 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void factor_into(const Integer& n, std::vector<Integer>& primes) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        primes.push_back(n);
        return;
    }
    Integer d = pollard_brent(n);
    factor_into(d, primes);
    factor_into(Integer(n / d), primes);
}

/// Prime factorization of |n| (n != 0): trial division, then Pollard-Brent.
inline std::vector<PrimePower> factor_integer(Integer n) {
    if (n == 0) throw std::domain_error("factorization of zero");
    n = abs(n);
    std::vector<Integer> primes;
    for (unsigned long p = 2; p < 1000 && n != 1; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            primes.emplace_back(p);
            n /= p;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().prime == p)
            ++out.back().exponent;
        else
            out.push_back({p, 1});
    }
    return out;
}

/// All positive divisors of |n|, ascending.
inline std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : factor_integer(n)) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(Integer(divs[i] * pk));
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace detail

struct SquarefreeFactor {
    Poly factor;
    unsigned multiplicity;

    friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun's algorithm. Returns monic, squarefree, pairwise coprime factors in
/// increasing multiplicity such that a = lc(a) * prod factor^multiplicity.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& a) {
    if (a.is_constant()) throw std::domain_error("squarefree decomposition of a constant");
    const Poly A = a.monic();
    const Poly dA = derivative(A);
    const Poly b = gcd(A, dA);
    Poly c = exact_quotient(A, b);
    Poly d = exact_quotient(dA, b) - derivative(c);

    std::vector<SquarefreeFactor> out;
    for (unsigned i = 1; !c.is_constant(); ++i) {
        Poly y = gcd(c, d);
        c = exact_quotient(c, y);
        d = exact_quotient(d, y) - derivative(c);
        if (!y.is_constant()) out.push_back({std::move(y), i});
    }
    return out;
}

/// Monic squarefree part a / gcd(a, a').
inline Poly squarefree_part(const Poly& a) {
    if (a.is_constant()) throw std::domain_error("squarefree part of a constant");
    return exact_quotient(a, gcd(a, derivative(a))).monic();
}

struct RationalRoot {
    Rat root;
    unsigned multiplicity;

    friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

struct RationalRootSplit {
    std::vector<RationalRoot> roots; // ascending
    Poly cofactor;                   // no rational roots; keeps lc of the input
};

/// Multiplicity of r as a root of a (a != 0).
inline unsigned root_multiplicity(Poly a, const Rat& r) {
    if (a.is_zero()) throw std::domain_error("root multiplicity in the zero polynomial");
    const Poly lin = Poly::linear_root(r);
    unsigned m = 0;
    for (;;) {
        auto [q, rem] = divrem(a, lin);
        if (!rem.is_zero()) return m;
        a = std::move(q);
        ++m;
    }
}

/// Splits off every rational root with its full multiplicity. Candidates come
/// from the rational-root theorem on the primitive integer form: p divides
/// the trailing coefficient and q the leading one.
inline RationalRootSplit rational_roots(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
    RationalRootSplit out;
    Poly rest = a;

    // Root 0 is handled up front so the trailing coefficient below is nonzero.
    std::size_t zeros = 0;
    while (zeros < rest.coefficients().size() && rest.coefficients()[zeros].is_zero()) ++zeros;
    if (zeros > 0) {
        rest = Poly(std::vector<Rat>(rest.coefficients().begin() + static_cast<std::ptrdiff_t>(zeros),
                                     rest.coefficients().end()));
    }

    std::vector<RationalRoot> found;
    if (zeros > 0) found.push_back({Rat(0), static_cast<unsigned>(zeros)});

    if (!rest.is_constant()) {
        const auto prim = detail::primitive_part(rest).second;
        const auto ps = detail::divisors(prim.front());
        const auto qs = detail::divisors(prim.back());
        std::vector<Rat> candidates;
        for (const auto& p : ps)
            for (const auto& q : qs) {
                if (gcd(p, q) != 1) continue;
                candidates.emplace_back(p, q);
                candidates.emplace_back(Integer(-p), q);
            }
        std::sort(candidates.begin(), candidates.end());
        for (const auto& r : candidates) {
            if (rest.is_constant()) break;
            if (!rest(r).is_zero()) continue;
            const unsigned m = root_multiplicity(rest, r);
            rest = exact_quotient(rest, pow(Poly::linear_root(r), static_cast<long>(m)));
            found.push_back({r, m});
        }
    }

    std::sort(found.begin(), found.end(),
              [](const RationalRoot& x, const RationalRoot& y) { return x.root < y.root; });
    out.roots = std::move(found);
    out.cofactor = std::move(rest);
    return out;
}

struct SplitFactor {
    Rat root;
    Integer multiplicity;

    friend bool operator==(const SplitFactor&, const SplitFactor&) = default;
};

/// A completely split polynomial prod (x - root)^multiplicity with roots
/// strictly ascending and multiplicities >= 1. Degrees can be enormous, so
/// expansion is explicit and bounded.
class FactoredSplit {
public:
    FactoredSplit() = default;

    explicit FactoredSplit(std::vector<SplitFactor> factors) : factors_(std::move(factors)) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i].multiplicity < 1)
                throw std::invalid_argument("split factor multiplicity must be positive");
            if (i > 0 && !(factors_[i - 1].root < factors_[i].root))
                throw std::invalid_argument("split factor roots must be strictly ascending");
        }
    }

    const std::vector<SplitFactor>& factors() const { return factors_; }

    Integer total_degree() const {
        Integer d = 0;
        for (const auto& f : factors_) d += f.multiplicity;
        return d;
    }

    /// Dense expansion. Throws std::length_error above max_degree.
    Poly expand(unsigned long max_degree = 1UL << 16) const {
        if (total_degree() > max_degree)
            throw std::length_error("split polynomial too large to expand densely");
        Poly out = Poly::constant(1);
        for (const auto& f : factors_) out *= binomial_power(f.root, f.multiplicity.get_ui());
        return out;
    }

    /// (x - r)^e written out from the binomial theorem.
    static Poly binomial_power(const Rat& r, unsigned long e) {
        std::vector<Rat> c(e + 1);
        Integer binom = 1;
        const Rat neg = -r;
        for (unsigned long j = 0; j <= e; ++j) {
            // coefficient of x^j is C(e, j) (-r)^(e-j)
            c[j] = Rat(binom) * pow(neg, e - j);
            binom = binom * (e - j) / (j + 1);
        }
        return Poly(std::move(c));
    }

    friend bool operator==(const FactoredSplit&, const FactoredSplit&) = default;

private:
    std::vector<SplitFactor> factors_;
};

} // namespace srolle
