// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// All randomness is seeded, so reruns are identical.

#include <splitrolle/cli/app.hpp>
#include <splitrolle/splitrolle.hpp>

#include "support/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace srolle;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string summary;
    std::vector<std::string> failures;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (failures.size() < 8) failures.push_back(what);
        }
    }
};

/// Degree up to which F is expanded and divided densely.
constexpr unsigned long kDenseDivisionLimit = 3000;

/// Dense polynomials over Z/p, ascending coefficients, for the cross-check
/// of witnesses whose F is too large to expand.
struct ModP {
    Integer p;

    Integer reduce(const Rat& r) const {
        Integer num = r.num() % p, inv;
        if (num < 0) num += p;
        Integer den = r.den() % p;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) throw std::domain_error("bad prime");
        return Integer(num * inv % p);
    }

    std::vector<Integer> reduce(const Poly& a) const {
        std::vector<Integer> out;
        for (const auto& c : a.coefficients()) out.push_back(reduce(c));
        return out;
    }

    std::vector<Integer> mul(const std::vector<Integer>& a, const std::vector<Integer>& b) const {
        std::vector<Integer> out(a.size() + b.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        return out;
    }

    /// Remainder of a modulo the monic reduction of f.
    std::vector<Integer> rem(std::vector<Integer> a, const std::vector<Integer>& f) const {
        const std::size_t n = f.size() - 1;
        Integer inv;
        mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), p.get_mpz_t());
        while (a.size() > n) {
            const Integer c = a.back() * inv % p;
            const std::size_t shift = a.size() - 1 - n;
            for (std::size_t i = 0; i <= n; ++i) {
                Integer& slot = a[shift + i];
                slot = (slot - c * f[i]) % p;
                if (slot < 0) slot += p;
            }
            a.pop_back();
        }
        return a;
    }

    std::vector<Integer> powmod(std::vector<Integer> base, Integer e, const std::vector<Integer>& f) const {
        std::vector<Integer> acc{Integer(1)};
        base = rem(base, f);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = rem(mul(acc, base), f);
            base = rem(mul(base, base), f);
            e >>= 1;
        }
        return acc;
    }
};

/// Whether F' = m prod (x - q_i)^{m k_i - 1} * sum k_i prod_{j != i}(x - q_j)
/// vanishes mod f over Z/p, for a prime p coprime to every denominator.
bool derivative_vanishes_mod(const RolleWitness& w, const Integer& p) {
    const ModP z{p};
    const std::vector<Integer> f = z.reduce(w.f);
    std::vector<Integer> g(w.nodes.size(), Integer(0));
    for (std::size_t i = 0; i < w.nodes.size(); ++i) {
        std::vector<Integer> term{z.reduce(Rat(Integer(w.exponents[i] * w.power)))};
        for (std::size_t j = 0; j < w.nodes.size(); ++j)
            if (j != i) term = z.mul(term, {z.reduce(-w.nodes[j]), Integer(1)});
        for (std::size_t t = 0; t < term.size(); ++t) g[t] = (g[t] + term[t]) % p;
    }
    std::vector<Integer> acc = z.rem(g, f);
    for (std::size_t i = 0; i < w.nodes.size(); ++i)
        acc = z.rem(z.mul(acc, z.powmod({z.reduce(-w.nodes[i]), Integer(1)}, w.power * w.exponents[i] - 1, f)), f);
    return std::all_of(acc.begin(), acc.end(), [](const Integer& c) { return c == 0; });
}

/// Large primes used for the modular cross-check.
std::vector<Integer> cross_check_primes() {
    std::vector<Integer> out;
    Integer q = Integer(1) << 61;
    for (int i = 0; i < 3; ++i) {
        mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
        out.push_back(q);
        q += Integer(1) << 40;
    }
    return out;
}

/// f | F' for a witness. Small F: plain long division of the expanded F'.
/// Large F: the exact factored test, cross-checked by F' mod f over three
/// large primes. Returns "dense", "factored", or "" on failure.
std::string witness_divides(const RolleWitness& w) {
    const FactoredSplit big = witness_polynomial(w);
    if (big.total_degree() <= kDenseDivisionLimit) {
        const Poly dF(oracle::power_rule(big.expand().coefficients()));
        return divrem(dF, w.f).remainder.is_zero() ? "dense" : "";
    }
    if (!divides_derivative_of_power(w.f, w.nodes, w.exponents, w.power)) return "";
    for (const auto& p : cross_check_primes())
        if (!derivative_vanishes_mod(w, p)) return "";
    return "factored";
}

std::vector<Poly> symmetric_charpolys(std::uint64_t seed, int count) {
    oracle::Rng rng(seed);
    std::vector<Poly> out;
    for (int i = 0; i < count; ++i) {
        const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
        out.emplace_back(oracle::characteristic_polynomial(rng.symmetric_matrix(n, 3)));
    }
    return out;
}

bool is_squarefree(const Poly& f) { return gcd(f, derivative(f)).is_constant(); }

Outcome criterion_symmetric_witness() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    int squarefree = 0, dense = 0, factored = 0;
    Integer max_degree = 0;
    for (const Poly& f : symmetric_charpolys(1001, 80)) {
        if (!is_squarefree(f)) continue;
        ++squarefree;
        try {
            const RolleWitness w = construct_witness(f);
            for (const auto& k : w.exponents) o.require(k > 0, "nonpositive exponent for " + cli::format_poly(f));
            const std::string how = witness_divides(w);
            o.require(!how.empty(), "f does not divide F' for " + cli::format_poly(f));
            (how == "dense" ? dense : factored) += 1;
            if (how == "factored") {
                // negative control: the cross-check must notice a bumped exponent
                RolleWitness bad = w;
                bad.exponents[0] += 1;
                o.require(!derivative_vanishes_mod(bad, cross_check_primes().front()),
                          "mod-p cross-check accepted a tampered witness for " + cli::format_poly(f));
            }
            max_degree = std::max(max_degree, witness_polynomial(w).total_degree());
        } catch (const std::exception& e) {
            o.require(false, "construct_witness threw for " + cli::format_poly(f) + ": " + e.what());
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(squarefree >= 50, "only " + std::to_string(squarefree) + " squarefree instances");
    o.require(secs < 60.0, "took " + std::to_string(secs) + " s");
    std::ostringstream s;
    s << squarefree << " squarefree instances, " << dense << " dense / " << factored
      << " factored + mod-p divisions, max deg F " << max_degree << ", " << secs << " s";
    o.summary = s.str();
    return o;
}

Outcome criterion_rational_multiplicities() {
    Outcome o;
    oracle::Rng rng(2002);
    std::vector<Poly> pool;
    for (const Poly& p : symmetric_charpolys(1001, 80))
        if (is_squarefree(p)) pool.push_back(p);
    int instances = 0, with_power_above_one = 0;
    while (instances < 60) {
        const Poly& p = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))];
        const Rat r1 = rng.rational(5, 4), r2 = rng.rational(5, 4);
        if (r1 == r2 || p(r1).is_zero() || p(r2).is_zero()) continue;
        const unsigned mu1 = static_cast<unsigned>(rng.uniform(1, 3)), mu2 = static_cast<unsigned>(rng.uniform(1, 3));
        const Poly f = pow(Poly::linear_root(r1), mu1) * pow(Poly::linear_root(r2), mu2) * p;
        ++instances;
        try {
            const RolleWitness w = construct_witness(f);
            o.require(!witness_divides(w).empty(), "f does not divide F' for " + cli::format_poly(f));
            if (w.power > 1) {
                ++with_power_above_one;
                o.require(!divides_derivative_of_power(f, w.nodes, w.exponents, w.power - 1),
                          "power " + w.power.get_str() + " not minimal for " + cli::format_poly(f));
            }
        } catch (const std::exception& e) {
            o.require(false, "construct_witness threw for " + cli::format_poly(f) + ": " + e.what());
        }
    }
    // Random charpolys give large exponents, so m > 1 is rare there. Small
    // quadratic cofactors with integer roots make it common.
    int extra = 0;
    while (extra < 30) {
        const long d = rng.uniform(2, 12);
        if (d == 4 || d == 9) continue;
        const Rat r1(rng.uniform(-3, 3)), r2(rng.uniform(-3, 3));
        if (r1 == r2) continue;
        const unsigned mu1 = static_cast<unsigned>(rng.uniform(1, 3)), mu2 = static_cast<unsigned>(rng.uniform(1, 3));
        const Poly f = pow(Poly::linear_root(r1), mu1) * pow(Poly::linear_root(r2), mu2) * Poly{Rat(-d), Rat(0), Rat(1)};
        ++extra;
        try {
            const RolleWitness w = construct_witness(f);
            o.require(!witness_divides(w).empty(), "f does not divide F' for " + cli::format_poly(f));
            if (w.power > 1) {
                ++with_power_above_one;
                o.require(!divides_derivative_of_power(f, w.nodes, w.exponents, w.power - 1),
                          "power " + w.power.get_str() + " not minimal for " + cli::format_poly(f));
            }
        } catch (const std::exception& e) {
            o.require(false, "construct_witness threw for " + cli::format_poly(f) + ": " + e.what());
        }
    }
    o.require(with_power_above_one > 0, "no instance exercised the minimality check");
    o.summary = std::to_string(instances) + " instances plus " + std::to_string(extra) + " with quadratic cofactors, " +
                std::to_string(with_power_above_one) + " with power > 1 checked for minimality";
    return o;
}

Outcome criterion_refusal_boundary() {
    Outcome o;
    for (const char* text : {"x^2 + 1", "(x^2 - 2)^2", "x*(x^2 + 1)"}) {
        bool refused = false;
        try {
            construct_witness(cli::parse_poly(text));
        } catch (const NotTotallyRealSimple&) {
            refused = true;
        } catch (const std::exception&) {
        }
        o.require(refused, std::string(text) + " was not refused with NotTotallyRealSimple");
    }
    for (const char* text : {"x^2 - 2", "x^3 - 2*x"}) {
        try {
            const RolleWitness w = construct_witness(cli::parse_poly(text));
            o.require(verify_witness(w).valid(), std::string(text) + " produced an invalid witness");
        } catch (const std::exception& e) {
            o.require(false, std::string(text) + " refused: " + e.what());
        }
    }
    o.summary = "3 refused, 2 accepted";
    return o;
}

Outcome criterion_worked_instance() {
    Outcome o;
    const Poly f = cli::parse_poly("x^2 - 2");
    const RolleWitness w = construct_witness(f);
    o.require(w.nodes == std::vector<Rat>{Rat(-2), Rat(0), Rat(2)}, "nodes differ from (-2, 0, 2)");
    o.require(w.exponents == std::vector<Integer>{1, 2, 1}, "exponents differ from (1, 2, 1)");
    o.require(w.power == 1, "power is not 1");
    const Poly big = witness_polynomial(w).expand();
    o.require(cli::format_poly(big) == "x^4 - 4*x^2", "F = " + cli::format_poly(big));
    const Poly dF(oracle::power_rule(big.coefficients()));
    o.require(cli::format_poly(dF) == "4*x^3 - 8*x", "F' = " + cli::format_poly(dF));
    const DivRem dr = divrem(dF, f);
    o.require(dr.remainder.is_zero() && dr.quotient == Poly{Rat(0), Rat(4)}, "F' != 4x (x^2 - 2)");
    o.summary = "F = " + cli::format_poly(big) + ", F' = " + cli::format_poly(dF) + " = 4*x*(x^2 - 2)";
    return o;
}

Outcome criterion_belyi() {
    Outcome o;
    oracle::Rng rng(5005);
    int sets = 0, dense = 0;
    for (; sets < 120; ++sets) {
        const long n = rng.uniform(2, 8);
        std::vector<Rat> pts;
        while (static_cast<long>(pts.size()) < n) {
            const Rat q = rng.rational(20, 20);
            if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
        }
        const BelyiCertificate c = construct_belyi(pts);
        const FactoredRational fr = c.function();
        const std::string tag = "set " + std::to_string(sets);
        o.require(fr.exponent_sum() == 0, tag + ": exponents do not sum to 0");
        o.require(cleared_combination<Integer>(c.points, c.exponents) == Poly::constant(c.constant),
                  tag + ": cleared combination is not N");
        const VerificationReport rep = verify_belyi(c);
        o.require(rep.valid(), tag + ": verify_belyi rejected");
        o.require(rep.passed("critical_points_at_marked_points"), tag + ": stray critical point");
        if (rep.passed("critical_points_dense")) ++dense;
        for (const auto& cp : c.critical_report) {
            const ProjectivePoint v = evaluate_projective(fr, cp.location);
            const bool match = cp.value == CriticalValue::infinity
                                   ? is_infinity(v)
                                   : !is_infinity(v) && std::get<Rat>(v) == Rat(cp.value == CriticalValue::one ? 1 : 0);
            o.require(match, tag + ": critical value mismatch");
        }
    }
    const BelyiCertificate w = construct_belyi(std::vector<Rat>{Rat(0), Rat(1), Rat(2)});
    o.require(w.exponents == std::vector<Integer>{1, -2, 1} && w.constant == 2 && w.degree == 2,
              "(0, 1, 2) does not give exponents (1, -2, 1), N = 2, degree 2");
    o.summary = std::to_string(sets) + " point sets, " + std::to_string(dense) +
                " also checked by dense Wronskian division; (0,1,2) -> (1,-2,1), N = 2, degree 2";
    return o;
}

Outcome criterion_rolle_converse() {
    Outcome o;
    oracle::Rng rng(6006);
    int count = 0;
    while (count < 60) {
        std::vector<std::pair<Rat, unsigned>> roots;
        const long n = rng.uniform(2, 5);
        for (long j = 0; j < n; ++j) {
            const Rat r = rng.rational(10, 5);
            if (std::any_of(roots.begin(), roots.end(), [&](const auto& p) { return p.first == r; })) continue;
            roots.emplace_back(r, static_cast<unsigned>(rng.uniform(1, 3)));
        }
        const Poly big(oracle::expand_linear_factors(roots));
        const Poly dF(oracle::power_rule(big.coefficients()));
        if (dF.is_constant()) continue;
        ++count;
        const RootClassification cls = classify_roots(dF);
        o.require(cls.nonreal_pair_count == 0 && cls.irrational_simple,
                  "derivative of split F not totally real simple: " + cli::format_poly(dF));
    }
    o.summary = std::to_string(count) + " split polynomials";
    return o;
}

Outcome criterion_realroot_oracles() {
    Outcome o;
    oracle::Rng rng(7007);
    int count = 0;
    while (count < 110) {
        // planted roots: rationals p/8 in [-4, 4] and pairs +-sqrt(d)
        std::vector<double> approx;
        std::vector<Rat> coeffs{Rat(1)};
        const long rational_count = rng.uniform(0, 3);
        for (long j = 0; j < rational_count; ++j) {
            const Rat r(Integer(rng.uniform(-32, 32)), Integer(8));
            approx.push_back(r.num().get_d() / r.den().get_d());
            coeffs = oracle::convolve(coeffs, {-r, Rat(1)});
        }
        const long quadratic_count = rng.uniform(rational_count == 0 ? 1 : 0, 2);
        for (long j = 0; j < quadratic_count; ++j) {
            const long d = rng.uniform(2, 15);
            if (d == 4 || d == 9) continue;
            approx.push_back(std::sqrt(double(d)));
            approx.push_back(-std::sqrt(double(d)));
            coeffs = oracle::convolve(coeffs, {Rat(-d), Rat(0), Rat(1)});
        }
        if (approx.empty()) continue;
        std::sort(approx.begin(), approx.end());
        bool separated = true;
        for (std::size_t j = 1; j < approx.size(); ++j) separated = separated && approx[j] - approx[j - 1] > 1.0 / 16;
        if (!separated) continue;
        ++count;

        const Poly f(coeffs);
        const std::string tag = cli::format_poly(f);
        const Rat B = cauchy_bound(f);
        const std::size_t planted = approx.size();
        const std::size_t sturm = count_real_roots(SturmChain(f), Interval{-B, B});
        const auto isolated = isolate_real_roots(f);
        const std::size_t grid = oracle::grid_root_count(coeffs, -B, B, Rat(1, 64));
        o.require(sturm == planted, tag + ": Sturm count " + std::to_string(sturm));
        o.require(isolated.size() == planted, tag + ": isolated " + std::to_string(isolated.size()));
        o.require(grid == planted, tag + ": grid count " + std::to_string(grid));
        for (std::size_t j = 0; j < isolated.size() && j < planted; ++j) {
            const Interval& iv = isolated[j];
            const double lo = iv.lo.num().get_d() / iv.lo.den().get_d();
            const double hi = iv.hi.num().get_d() / iv.hi.den().get_d();
            const auto inside = std::count_if(approx.begin(), approx.end(), [&](double a) {
                return iv.is_point() ? std::abs(a - lo) < 1e-12 : lo - 1e-12 < a && a < hi + 1e-12;
            });
            o.require(inside == 1, tag + ": interval " + iv.lo.str() + ".." + iv.hi.str() + " holds " +
                                       std::to_string(inside) + " planted roots");
        }
    }
    o.summary = std::to_string(count) + " planted polynomials, Sturm / isolation / grid step 1/64 agree";
    return o;
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

using Mutation = std::function<void(cli::Json&)>;

Outcome criterion_cli_roundtrips() {
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / "splitrolle_acceptance";
    fs::create_directories(dir);

    std::vector<fs::path> docs;
    int n = 0;
    auto make = [&](const std::vector<std::string>& args) {
        const fs::path p = dir / ("cert" + std::to_string(n++) + ".json");
        std::vector<std::string> full = args;
        full.push_back("--out");
        full.push_back(p.string());
        const int code = run_cli(full).code;
        o.require(code == 0, "generation exit " + std::to_string(code) + " for " + args[1]);
        if (code == 0) docs.push_back(p);
    };
    for (const char* poly : {"x^2 - 2", "x^3 - 2*x", "x^4 - 4*x^2 + 2", "(x - 1)^2*(x - 3)", "x^3 - 3*x + 1",
                             "2*x^2 - 3", "x*(x - 1)*(x^2 - 5)", "1000*x^2 - 1000*x + 249"})
        make({"witness", poly});
    for (const Poly& f : symmetric_charpolys(8008, 12))
        if (is_squarefree(f)) make({"witness", cli::format_poly(f)});
    oracle::Rng rng(8009);
    for (int i = 0; i < 15; ++i) {
        std::vector<std::string> args{"belyi"};
        std::vector<Rat> pts;
        while (pts.size() < static_cast<std::size_t>(rng.uniform(2, 6))) {
            const Rat q = rng.rational(20, 20);
            if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
        }
        for (const auto& q : pts) args.push_back(q.str());
        make(args);
    }

    int reverified = 0;
    for (const auto& p : docs) {
        const int code = run_cli({"verify", p.string()}).code;
        o.require(code == 0, "verify exit " + std::to_string(code) + " for " + p.filename().string());
        reverified += code == 0;
    }

    // Single-field mutations. Each edits exactly one JSON field.
    auto bump = [](cli::Json& v) { v = (Rat::parse(v.get<std::string>()) + Rat(1)).str(); };
    const std::vector<std::pair<std::string, Mutation>> witness_mutations{
        {"exponent+1", [&](cli::Json& j) { bump(j["payload"]["exponents"][0]); }},
        {"last exponent+1", [&](cli::Json& j) { bump(j["payload"]["exponents"].back()); }},
        {"node+1", [&](cli::Json& j) { bump(j["payload"]["nodes"][0]); }},
        {"power+1", [&](cli::Json& j) { bump(j["payload"]["power"]); }},
        {"scale+1", [&](cli::Json& j) { bump(j["payload"]["scale"]); }},
        {"constant coefficient+1", [&](cli::Json& j) { bump(j["payload"]["f"][0]); }},
        {"power 0", [&](cli::Json& j) { j["payload"]["power"] = "0"; }},
        {"exponent negated",
         [&](cli::Json& j) { j["payload"]["exponents"][0] = "-" + j["payload"]["exponents"][0].get<std::string>(); }},
    };
    const std::vector<std::pair<std::string, Mutation>> belyi_mutations{
        {"exponent+1", [&](cli::Json& j) { bump(j["payload"]["exponents"][0]); }},
        {"point+1/7", [&](cli::Json& j) {
             auto& v = j["payload"]["points"].back();
             v = (Rat::parse(v.get<std::string>()) + Rat(1, 7)).str();
         }},
        {"constant+1", [&](cli::Json& j) { bump(j["payload"]["constant"]); }},
        {"degree+1", [&](cli::Json& j) { bump(j["payload"]["degree"]); }},
        {"critical index+1", [&](cli::Json& j) {
             auto& rep = j["payload"]["critical_report"];
             if (rep.empty()) rep.push_back({{"location", "infinity"}, {"value", "1"}, {"ramification_index", "2"}});
             else bump(rep[0]["ramification_index"]);
         }},
    };

    int mutations = 0, rejected = 0;
    for (std::size_t d = 0; d < docs.size() && mutations < 60; ++d) {
        const cli::Json base = cli::Json::parse(slurp(docs[d]));
        const bool is_witness = base["kind"] == "rolle-witness";
        const auto& pool = is_witness ? witness_mutations : belyi_mutations;
        for (std::size_t m = d % 3; m < pool.size(); m += 3) {
            cli::Json j = base;
            pool[m].second(j);
            const fs::path p = dir / ("mutated" + std::to_string(mutations) + ".json");
            std::ofstream(p, std::ios::binary) << cli::render(j);
            ++mutations;
            const int code = run_cli({"verify", p.string()}).code;
            o.require(code == 1, "mutation '" + pool[m].first + "' of " + docs[d].filename().string() +
                                     " gave exit " + std::to_string(code));
            rejected += code == 1;
        }
    }
    o.require(mutations >= 50, "only " + std::to_string(mutations) + " mutations generated");

    oracle::Rng prng(8010);
    int roundtrips = 0;
    for (int i = 0; i < 200; ++i) {
        const Poly p = prng.poly(10, 50, 12);
        const std::string text = cli::format_poly(p);
        bool ok = false;
        try {
            ok = cli::parse_poly(text) == p && cli::format_poly(cli::parse_poly(text)) == text;
        } catch (const std::exception&) {
        }
        o.require(ok, "round trip failed for " + text);
        roundtrips += ok;
    }
    fs::remove_all(dir);

    o.summary = std::to_string(reverified) + "/" + std::to_string(docs.size()) + " certificates re-verified, " +
                std::to_string(rejected) + "/" + std::to_string(mutations) + " mutations rejected, " +
                std::to_string(roundtrips) + "/200 parse/format round trips";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 witness soundness on symmetric-matrix characteristic polynomials", criterion_symmetric_witness},
        {"2 witness soundness with rational multiplicities and minimal power", criterion_rational_multiplicities},
        {"3 refusal boundary", criterion_refusal_boundary},
        {"4 worked instance x^2 - 2", criterion_worked_instance},
        {"5 Belyi certificate validity", criterion_belyi},
        {"6 derivative of a split polynomial is totally real and simple", criterion_rolle_converse},
        {"7 real-root oracle equivalence", criterion_realroot_oracles},
        {"8 CLI round trips and mutation rejection", criterion_cli_roundtrips},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.failures.push_back(std::string("uncaught exception: ") + e.what());
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name;
        if (!o.summary.empty()) std::cout << " (" << o.summary << ")";
        std::cout << "\n";
        for (const auto& f : o.failures) std::cout << "      " << f << "\n";
        failed += !o.ok;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion/criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
