#include <splitrolle/cli/app.hpp>

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using srolle::Poly;
using srolle::Rat;
using srolle::cli::format_poly;
using srolle::cli::parse_poly;
using srolle::cli::ParseError;

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = srolle::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "splitrolle_test_cli";
    fs::create_directories(dir);
    return dir / name;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

} // namespace

TEST(ParsePoly, Examples) {
    EXPECT_EQ(parse_poly("x^2 - 2"), (Poly{Rat(-2), Rat(0), Rat(1)}));
    EXPECT_EQ(parse_poly("x^3-2*x"), (Poly{Rat(0), Rat(-2), Rat(0), Rat(1)}));
    EXPECT_EQ(parse_poly("(x-1)^2*(x+3)"), (Poly{Rat(3), Rat(-5), Rat(1), Rat(1)}));
    EXPECT_EQ(parse_poly("1/2*x + 1/3"), (Poly{Rat::parse("1/3"), Rat::parse("1/2")}));
    EXPECT_EQ(parse_poly("2x(x+1)"), (Poly{Rat(0), Rat(2), Rat(2)}));
    EXPECT_EQ(parse_poly("-x^2"), (Poly{Rat(0), Rat(0), Rat(-1)}));
    EXPECT_EQ(parse_poly("0"), Poly());
    EXPECT_EQ(parse_poly("x^0"), Poly::constant(1));
}

TEST(ParsePoly, Errors) {
    EXPECT_THROW(parse_poly(""), ParseError);
    EXPECT_THROW(parse_poly("x^-1"), ParseError);
    EXPECT_THROW(parse_poly("x^1/2"), ParseError);
    EXPECT_THROW(parse_poly("x/2"), ParseError);
    EXPECT_THROW(parse_poly("1/0"), ParseError);
    EXPECT_THROW(parse_poly("x^5000"), ParseError);
    EXPECT_THROW(parse_poly("(x+1"), ParseError);
    EXPECT_THROW(parse_poly("y"), ParseError);
    EXPECT_THROW(parse_poly("1.5*x"), ParseError);
    try {
        parse_poly("x + $");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 4u);
    }
}

TEST(ParseCoefficients, Examples) {
    EXPECT_EQ(srolle::cli::parse_coefficients("-2,0,1"), (Poly{Rat(-2), Rat(0), Rat(1)}));
    EXPECT_EQ(srolle::cli::parse_coefficients("1/2, 3"), (Poly{Rat::parse("1/2"), Rat(3)}));
    EXPECT_THROW(srolle::cli::parse_coefficients("1,,2"), ParseError);
    EXPECT_THROW(srolle::cli::parse_coefficients("a"), ParseError);
}

TEST(FormatPoly, Examples) {
    EXPECT_EQ(format_poly(Poly{Rat(-2), Rat(0), Rat(1)}), "x^2 - 2");
    EXPECT_EQ(format_poly(Poly{Rat::parse("1/3"), Rat::parse("1/2")}), "1/2*x + 1/3");
    EXPECT_EQ(format_poly(Poly{Rat(2), Rat(0), Rat(-1)}), "-x^2 + 2");
    EXPECT_EQ(format_poly(Poly{Rat(0), Rat(1), Rat(0), Rat(-1)}), "-x^3 + x");
    EXPECT_EQ(format_poly(Poly()), "0");
    EXPECT_EQ(format_poly(Poly::constant(Rat(-5, 7))), "-5/7");
}

TEST(FormatPoly, RoundTripProperty) {
    oracle::Rng rng(61);
    for (int i = 0; i < 300; ++i) {
        const Poly p = rng.poly(8, 30, 9);
        EXPECT_EQ(parse_poly(format_poly(p)), p) << format_poly(p);
    }
}

TEST(Document, RoundTrip) {
    using namespace srolle::cli;
    const auto w = srolle::construct_witness(parse_poly("x^3 - 2*x"));
    CertificateDocument doc{kSchemaVersion, w, srolle::verify_witness(w)};
    const std::string text = render(to_json(doc));
    EXPECT_EQ(parse_document(text), doc);
    EXPECT_EQ(render(to_json(parse_document(text))), text);

    const auto b = srolle::construct_belyi(std::vector<Rat>{Rat(0), Rat(1), Rat(2)});
    CertificateDocument bdoc{kSchemaVersion, b, srolle::verify_belyi(b)};
    const std::string btext = render(to_json(bdoc));
    EXPECT_EQ(parse_document(btext), bdoc);
    EXPECT_NE(btext.find("\"infinity\""), std::string::npos);
}

TEST(Document, Errors) {
    using srolle::cli::DocumentError;
    using srolle::cli::parse_document;
    EXPECT_THROW(parse_document("{"), DocumentError);
    EXPECT_THROW(parse_document("[]"), DocumentError);
    EXPECT_THROW(parse_document(R"({"schema_version":"2","kind":"belyi","payload":{}})"), DocumentError);
    EXPECT_THROW(parse_document(R"({"schema_version":"1","kind":"other","payload":{}})"), DocumentError);
    EXPECT_THROW(parse_document(
                     R"({"schema_version":"1","kind":"rolle-witness","payload":{"f":[1],"nodes":[],"exponents":[],"power":1,"scale":"1"}})"),
                 DocumentError);
}

TEST(Run, ExitCodes) {
    EXPECT_EQ(run({"witness", "x^2-2"}).code, 0);
    EXPECT_EQ(run({"witness", "x^2+1"}).code, 1);
    EXPECT_EQ(run({"witness", "x^^2"}).code, 2);
    EXPECT_EQ(run({"witness", "--coeffs", "-2,0,1"}).code, 0);
    EXPECT_EQ(run({"witness", "x^2-2", "--max-denominator", "zero"}).code, 2);
    EXPECT_EQ(run({"witness", "1000*x^2 - 1000*x + 249", "--max-denominator", "1"}).code, 1);
    EXPECT_EQ(run({"analyze", "x^3 - 2*x"}).code, 0);
    EXPECT_EQ(run({"analyze", "7"}).code, 1);
    EXPECT_EQ(run({"belyi", "0", "1", "2"}).code, 0);
    EXPECT_EQ(run({"belyi", "-1", "0", "1/2"}).code, 0);
    EXPECT_EQ(run({"belyi", "1"}).code, 2);
    EXPECT_EQ(run({"belyi", "1", "1"}).code, 2);
    EXPECT_EQ(run({"belyi", "1", "x"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"verify", temp_file("does_not_exist.json").string()}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Run, AnalyzeOutput) {
    const auto r = run({"analyze", "x^3 - 2*x"});
    const auto j = srolle::cli::Json::parse(r.out);
    EXPECT_EQ(j["kind"], "analysis");
    EXPECT_EQ(j["degree"], 3);
    EXPECT_EQ(j["rational_roots"].size(), 1u);
    EXPECT_EQ(j["irrational_real"].size(), 2u);
    EXPECT_EQ(j["totally_real"], true);
}

TEST(Run, WitnessOutputIsDeterministic) {
    const auto a = run({"witness", "x^2 - 2"});
    const auto b = run({"witness", "x^2 - 2"});
    EXPECT_EQ(a.out, b.out);
    const auto j = srolle::cli::Json::parse(a.out);
    EXPECT_EQ(j["payload"]["exponents"], srolle::cli::Json::parse(R"(["1","2","1"])"));
    EXPECT_EQ(j["verification"]["valid"], true);
}

TEST(Run, VerifyAcceptsAndRejects) {
    const fs::path good = temp_file("witness.json");
    ASSERT_EQ(run({"witness", "x^3 - 2*x", "--out", good.string()}).code, 0);
    EXPECT_EQ(run({"verify", good.string()}).code, 0);

    std::ifstream in(good);
    std::stringstream buf;
    buf << in.rdbuf();
    auto j = srolle::cli::Json::parse(buf.str());
    j["payload"]["exponents"][1] = "3";
    const fs::path bad = temp_file("witness_bad.json");
    write_file(bad, j.dump());
    const auto r = run({"verify", bad.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("failed"), std::string::npos);

    write_file(bad, "not json");
    EXPECT_EQ(run({"verify", bad.string()}).code, 2);
}
