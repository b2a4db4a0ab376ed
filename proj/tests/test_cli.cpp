#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lscat/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = lscat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("lscat_cli_" + name);
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST(Cli, CatPrintsValueAndTwoTraceLines) {
    const auto r = run({"cat", "L(5,1) # T3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("cat = 3\n", 0), 0u);
    EXPECT_NE(r.out.find("\n  upper: DIM"), std::string::npos);
    EXPECT_NE(r.out.find("\n  lower: R2"), std::string::npos);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST(Cli, GaneaWithCertificateAndVerification) {
    const auto r = run({"ganea", "RP3", "--n", "1", "--cert", "--verify"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("cat(M x S^1) = 4\n", 0), 0u);
    EXPECT_NE(r.out.find("certificate 1\n"), std::string::npos);
    EXPECT_NE(r.out.find("certificate verified"), std::string::npos);
}

TEST(Cli, CupLengthOfSphereFile) {
    const auto gen = run({"gen", "S3"});
    ASSERT_EQ(gen.code, 0);
    const auto path = temp_file("s3.dcx", gen.out);
    const auto r = run({"cuplength", "--coeffs", "2", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("cl = 1\n", 0), 0u);
}

TEST(Cli, HomologyRoundTripThroughDcx) {
    const auto gen = run({"gen", "T3"});
    const auto path = temp_file("t3.dcx", gen.out);
    const auto from_file = run({"homology", path.string()});
    const auto from_expr = run({"homology", "T3"});
    EXPECT_EQ(from_file.code, 0);
    EXPECT_EQ(from_file.out, from_expr.out);
    EXPECT_EQ(from_expr.out, "H0 = Z\nH1 = Z^3\nH2 = Z^3\nH3 = Z\n");
}

TEST(Cli, GenWithParametersAndExpressions) {
    EXPECT_EQ(run({"gen", "L", "5", "1"}).out, run({"gen", "L(5,1)"}).out);
    EXPECT_EQ(run({"gen", "L", "4", "2"}).code, 2);
    EXPECT_EQ(run({"gen", "L", "x"}).code, 1);
    EXPECT_EQ(run({"gen", "Poinc"}).code, 2);
}

TEST(Cli, CheckCertificateFiles) {
    const auto good = run({"cat", "RP2xS1", "--cert"});
    ASSERT_EQ(good.code, 0);
    const std::string text = good.out.substr(good.out.find("certificate 1"));
    EXPECT_EQ(run({"check", temp_file("good.cert", text).string()}).code, 0);
    EXPECT_EQ(run({"check", temp_file("full.cert", good.out).string()}).code, 0);

    std::string bad = text;
    bad.replace(bad.find("R3 bound=3"), 10, "R3 bound=4");
    const auto r = run({"check", temp_file("bad.cert", bad).string(), "--jobs", "2"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("REJECTED"), std::string::npos);

    EXPECT_EQ(run({"check", temp_file("junk.cert", "hello\n").string()}).code, 3);
}

TEST(Cli, DetectAndDegreeOne) {
    const auto d = run({"detect", "S1~S2 # L(3,1)"});
    EXPECT_EQ(d.code, 0);
    EXPECT_EQ(d.out.rfind("unknown\n", 0), 0u);
    const auto g = run({"degree1", "S1xS2 # S1xS2", "RP3"});
    EXPECT_EQ(g.out.rfind("NoDegreeOneMap\n", 0), 0u);
    EXPECT_EQ(run({"degree1", "RP2xS1", "RP3"}).code, 2);
}

TEST(Cli, RingPi1AndModuli) {
    EXPECT_NE(run({"ring", "RP3"}).out.find("x1_0 u x1_0 = x2_0"), std::string::npos);
    EXPECT_EQ(run({"ring", "RP3", "--coeffs", "4"}).code, 2);
    EXPECT_EQ(run({"ring", "RP3", "--coeffs", "1"}).code, 1);
    EXPECT_EQ(run({"homology", "RP3", "--coeffs", "2"}).out, "H0 = Z/2\nH1 = Z/2\nH2 = Z/2\nH3 = Z/2\n");
    const auto p = run({"pi1", "L(5,1)"});
    EXPECT_NE(p.out.find("class: finite(5)"), std::string::npos);
    EXPECT_EQ(run({"pi1", "Poinc"}).out, "catalog: finite of order 120\n");
}

TEST(Cli, UsageAndComputationErrors) {
    const auto none = run({});
    EXPECT_EQ(none.code, 1);
    EXPECT_NE(none.err.find("summand"), std::string::npos);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"cat"}).code, 1);
    const auto bad = run({"cat", "T3 # K"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("at byte 5"), std::string::npos);
    EXPECT_EQ(run({"homology", "Q8"}).code, 2);
    EXPECT_EQ(run({"ganea", "T3", "--n", "0"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DeterministicOutput) {
    for (auto verb : {"cat", "ring", "pi1"}) {
        EXPECT_EQ(run({verb, "RP2xS1 # L(3,1)"}).out, run({verb, "RP2xS1 # L(3,1)"}).out) << verb;
    }
    EXPECT_EQ(run({"cat", "S1~S2 # L(3,1)", "--cert", "--verify", "--jobs", "4"}).out,
              run({"cat", "S1~S2 # L(3,1)", "--cert", "--verify"}).out);
}
