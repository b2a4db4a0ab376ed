#include <gtest/gtest.h>

#include "lscat/error.hpp"
#include "lscat/manifold_algebra.hpp"
#include "support/oracles.hpp"

using namespace lscat;

namespace {

const char* const kExprs[] = {"S3",     "S1xS2", "S1~S2",   "T3",     "RP2xS1",        "RP3",
                              "L(3,1)", "L(7,3)", "Q8",     "Poinc", "L(5,1) # T3",   "S1~S2 # L(3,1)",
                              "S1xS2 # S1~S2", "RP3 # RP3 # S1xS2"};

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Parse, TwoSummands) {
    const auto e = parse_expr("L(5,1) # T3");
    ASSERT_EQ(e.summands.size(), 2u);
    EXPECT_EQ(e.summands[0].kind, PrimeKind::Lens);
    EXPECT_EQ(e.summands[0].p, 5);
    EXPECT_EQ(e.summands[1].kind, PrimeKind::T3);
}

TEST(Parse, SphereSumNormalizesToSphere) { EXPECT_EQ(normalize(parse_expr("S3 # S3")).to_string(), "S3"); }

TEST(Parse, BadLensParameters) {
    EXPECT_EQ(code_of([] { parse_expr("L(4,2)"); }), ErrorCode::BadLensParams);
    EXPECT_EQ(code_of([] { parse_expr("L(1,0)"); }), ErrorCode::BadLensParams);
}

TEST(Parse, ErrorsCarryPositionAndGrammar) {
    try {
        parse_expr("T3 # Klein");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
        EXPECT_NE(std::string(e.what()).find("grammar"), std::string::npos);
    }
    EXPECT_THROW(parse_expr(""), ParseError);
    EXPECT_THROW(parse_expr("T3 #"), ParseError);
    EXPECT_THROW(parse_expr("L(5,1"), ParseError);
}

TEST(Parse, AliasAndSpacing) {
    EXPECT_EQ(parse_expr("RP3"), parse_expr("L(2,1)"));
    EXPECT_EQ(parse_expr("T3#RP3"), parse_expr("T3 # RP3"));
}

TEST(Normalize, Examples) {
    EXPECT_EQ(normalize(parse_expr("S3 # L(3,1)")).to_string(), "L(3,1)");
    EXPECT_EQ(normalize(parse_expr("T3 # L(2,1)")), normalize(parse_expr("L(2,1) # T3")));
    EXPECT_EQ(normalize(parse_expr("S3")).to_string(), "S3");
    EXPECT_EQ(normalize(parse_expr("L(5,7)")).to_string(), "L(5,2)");
}

TEST(Normalize, IdempotentAndPrintParseInverse) {
    for (auto text : kExprs) {
        const auto n = normalize(parse_expr(text));
        EXPECT_EQ(normalize(n), n) << text;
        EXPECT_EQ(normalize(parse_expr(n.to_string())), n) << text;
    }
}

TEST(Catalog, SelfTestAndDumpRoundTrip) {
    EXPECT_EQ(catalog_self_test(catalog()), "");
    const auto loaded = load_catalog(dump_catalog());
    EXPECT_EQ(catalog_self_test(loaded), "");
    ASSERT_EQ(loaded.size(), catalog().size());
    for (std::size_t i = 0; i < loaded.size(); ++i) EXPECT_EQ(loaded[i].key, catalog()[i].key);
}

TEST(Catalog, SelfTestCatchesContradiction) {
    auto bad = catalog();
    bad[0].pi1 = Pi1Tag::Free;  // S3 with free pi1 and trivial H1
    bad[0].pi1_value = 1;
    EXPECT_NE(catalog_self_test(bad), "");
}

TEST(Catalog, RecordsAgreeWithTriangulations) {
    for (auto text : {"S3", "S1xS2", "S1~S2", "T3", "RP2xS1", "RP3", "L(5,2)"}) {
        const auto e = normalize(parse_expr(text));
        const auto r = record(e.summands[0]);
        const auto c = triangulate_expr(e);
        EXPECT_EQ(validate(c).orientable, r.orientable) << text;
        EXPECT_EQ(format_group(r.h1, 0), oracle::format(oracle::homology(c)[1])) << text;
    }
}

TEST(Facts, Examples) {
    const auto a = facts(normalize(parse_expr("S1xS2 # S1~S2")));
    EXPECT_EQ(a.pi1, Pi1Tag::Free);
    EXPECT_EQ(a.pi1_value, 2u);
    EXPECT_FALSE(a.orientable);
    const auto b = facts(normalize(parse_expr("L(3,1)")));
    EXPECT_EQ(b.pi1, Pi1Tag::Finite);
    EXPECT_EQ(b.pi1_value, 3u);
    EXPECT_TRUE(b.orientable);
    EXPECT_TRUE(b.has_odd_torsion);
    const auto c = facts(normalize(parse_expr("S1~S2 # L(3,1)")));
    EXPECT_EQ(c.pi1, Pi1Tag::InfiniteNonFree);
    EXPECT_TRUE(c.exceptional_shape);
    EXPECT_FALSE(facts(normalize(parse_expr("RP2xS1 # RP3"))).exceptional_shape);
    EXPECT_FALSE(facts(normalize(parse_expr("Poinc"))).triangulable);
}

TEST(Facts, H1MatchesTriangulation) {
    for (auto text : {"L(5,1) # T3", "S1~S2 # L(3,1)", "RP3 # RP3 # S1xS2", "RP2xS1 # S1xS2"}) {
        const auto e = normalize(parse_expr(text));
        EXPECT_EQ(format_group(facts(e).h1, 0), oracle::format(oracle::homology(triangulate_expr(e))[1])) << text;
    }
}

TEST(Triangulate, Examples) {
    EXPECT_EQ(triangulate_expr(normalize(parse_expr("RP3"))), generator("L", std::vector<int>{2, 1}));
    EXPECT_EQ(oracle::format(oracle::homology(triangulate_expr(normalize(parse_expr("S1xS2 # S1xS2"))))[1]), "Z^2");
    EXPECT_EQ(code_of([] { triangulate_expr(parse_expr("Poinc")); }), ErrorCode::NoTriangulation);
    EXPECT_EQ(code_of([] { triangulate_expr(parse_expr("T3 # Q8")); }), ErrorCode::NoTriangulation);
}

TEST(DoubleCover, Examples) {
    EXPECT_EQ(orientable_double_cover(normalize(parse_expr("S1~S2 # L(3,1)"))).to_string(),
              "S1xS2 # L(3,1) # L(3,2)");
    EXPECT_EQ(orientable_double_cover(normalize(parse_expr("S1~S2"))).to_string(), "S1xS2");
    EXPECT_EQ(code_of([] { orientable_double_cover(parse_expr("T3")); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(mirror(parse_expr("L(5,2)").summands[0]).q, 3);
    EXPECT_EQ(mirror(parse_expr("T3").summands[0]), parse_expr("T3").summands[0]);
}
