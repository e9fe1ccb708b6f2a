#pragma once

/**
 * @file app.hpp
 * @brief The splitrolle command line: analyze, witness, belyi, verify.
 *
 * Exit codes: 0 success or valid certificate, 1 construction refused or
 * certificate invalid, 2 usage or parse error. Documents go to the output
 * stream (or --out FILE), diagnostics to the error stream.
 */

#include <splitrolle/belyimap.hpp>
#include <splitrolle/cli/document.hpp>
#include <splitrolle/cli/polyexpr.hpp>
#include <splitrolle/error.hpp>
#include <splitrolle/realroots.hpp>
#include <splitrolle/rollewitness.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace srolle::cli {

enum ExitCode : int { kOk = 0, kRefused = 1, kUsage = 2 };

namespace detail {

struct Options {
    std::string poly;
    std::vector<std::string> points;
    std::string file;
    std::string out_file;
    std::string max_denominator;
    bool coeffs = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Poly read_poly(const Options& o) {
    return o.coeffs ? parse_coefficients(o.poly) : parse_poly(o.poly);
}

inline void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + o.out_file + "' for writing");
    f << text;
    if (!f) throw UsageError("failed writing '" + o.out_file + "'");
}

inline int cmd_analyze(const Options& o, std::ostream& out) {
    const Poly f = read_poly(o);
    if (f.is_constant()) throw DegenerateInput("cannot analyze a constant polynomial");
    emit(o, render(analysis_json(f, classify_roots(f))), out);
    return kOk;
}

inline int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
    const Poly f = read_poly(o);
    WitnessOptions wo;
    if (!o.max_denominator.empty()) {
        try {
            wo.max_denominator = parse_integer(o.max_denominator);
        } catch (const std::exception&) {
            throw UsageError("--max-denominator expects a positive integer");
        }
        if (*wo.max_denominator < 1) throw UsageError("--max-denominator expects a positive integer");
    }
    RolleWitness w = construct_witness(f, wo);
    CertificateDocument doc{kSchemaVersion, w, verify_witness(w)};
    emit(o, render(to_json(doc)), out);
    if (!doc.verification->valid()) {
        err << "constructed witness failed verification\n";
        return kRefused;
    }
    return kOk;
}

inline int cmd_belyi(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<Rat> points;
    for (const auto& p : o.points) {
        try {
            points.push_back(Rat::parse(p));
        } catch (const std::exception&) {
            throw UsageError("malformed rational point '" + p + "'");
        }
    }
    BelyiCertificate cert;
    try {
        cert = construct_belyi(points);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    CertificateDocument doc{kSchemaVersion, cert, verify_belyi(cert)};
    emit(o, render(to_json(doc)), out);
    if (!doc.verification->valid()) {
        err << "constructed certificate failed verification\n";
        return kRefused;
    }
    return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    std::ifstream in(o.file, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + o.file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const CertificateDocument doc = parse_document(buf.str());

    const VerificationReport rep = std::holds_alternative<RolleWitness>(doc.payload)
                                       ? verify_witness(std::get<RolleWitness>(doc.payload))
                                       : verify_belyi(std::get<BelyiCertificate>(doc.payload));
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = doc.kind();
    j["verification"] = report_json(rep);
    emit(o, render(j), out);
    for (const auto& c : rep.checks)
        if (c.status == CheckStatus::fail) err << "check " << c.name << " failed: " << c.detail << "\n";
    return rep.valid() ? kOk : kRefused;
}

} // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified split-Rolle witnesses and Belyi maps over Q", "splitrolle"};
    app.require_subcommand(1, 1);
    detail::Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", o.out_file, "Write the document to FILE instead of standard output");
    };

    auto* analyze = app.add_subcommand("analyze", "Classify the roots of a polynomial");
    analyze->add_option("poly", o.poly, "Polynomial in x, e.g. \"x^4 - 4*x^2\"")->required();
    analyze->add_flag("--coeffs", o.coeffs, "Read the polynomial as ascending comma-separated coefficients");
    add_common(analyze);

    auto* witness = app.add_subcommand("witness", "Build a split polynomial F with f | F'");
    witness->add_option("poly", o.poly, "Polynomial in x")->required();
    witness->add_flag("--coeffs", o.coeffs, "Read the polynomial as ascending comma-separated coefficients");
    witness->add_option("--max-denominator", o.max_denominator,
                        "Refuse if an interleaving rational needs a larger denominator");
    add_common(witness);

    auto* belyi = app.add_subcommand("belyi", "Build a Belyi map from distinct rational points");
    belyi->add_option("points", o.points, "Rational points q1 q2 ...")->required();
    add_common(belyi);

    auto* verify = app.add_subcommand("verify", "Re-verify a certificate document");
    verify->add_option("file", o.file, "Certificate JSON file")->required();
    add_common(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (analyze->parsed()) return detail::cmd_analyze(o, out);
        if (witness->parsed()) return detail::cmd_witness(o, out, err);
        if (belyi->parsed()) return detail::cmd_belyi(o, out, err);
        return detail::cmd_verify(o, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const DocumentError& e) {
        err << "document error: " << e.what() << "\n";
        return kUsage;
    } catch (const detail::UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Refusal& e) {
        err << "refused: " << e.what() << "\n";
        return kRefused;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kRefused;
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace srolle::cli
