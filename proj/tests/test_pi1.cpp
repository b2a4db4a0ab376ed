#include <gtest/gtest.h>

#include "lscat/error.hpp"
#include "lscat/manifold_algebra.hpp"
#include "lscat/pi1.hpp"

using namespace lscat;

namespace {

GroupPresentation P(const char* text) { return parse_presentation(text); }

GroupPresentation simplified(const char* expr) {
    return tietze_simplify(edge_path_presentation(triangulate_expr(normalize(parse_expr(expr)))));
}

}  // namespace

TEST(Presentation, ParsePrintRoundTrip) {
    for (auto text : {"<2; aBAb, aa>", "<1; aaaaa>", "<0;>", "<3; abc, ABC>"}) EXPECT_EQ(P(text).to_string(), text);
    const auto p = P("<2; aB>");
    EXPECT_EQ(p.relators[0], (Word{1, -2}));
}

TEST(Presentation, ParseErrorsCarryPosition) {
    try {
        P("<2; ac>");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
    }
    EXPECT_THROW(P("2; a"), ParseError);
}

TEST(Words, Reductions) {
    EXPECT_EQ(free_reduce({1, 2, -2, -1, 3}), (Word{3}));
    EXPECT_EQ(cyclic_reduce({-1, 2, 3, 1}), (Word{2, 3}));
    EXPECT_EQ(inverse({1, -2}), (Word{2, -1}));
    EXPECT_EQ(total_length(P("<2; ab, aaa>")), 5u);
}

TEST(EdgePath, SphereSimplifiesToTrivial) {
    const auto p = simplified("S3");
    EXPECT_EQ(p.generators, 0);
    EXPECT_EQ(classify(p).tag, Pi1Tag::Trivial);
}

TEST(EdgePath, LensAbelianization) {
    EXPECT_EQ(format_group(abelianization(edge_path_presentation(generator("L", std::vector<int>{5, 1}))), 0), "Z/5");
}

TEST(EdgePath, TorusAbelianization) {
    EXPECT_EQ(format_group(abelianization(edge_path_presentation(generator("T3"))), 0), "Z^3");
}

TEST(EdgePath, ProductBundleSimplifiesToOneFreeGenerator) {
    const auto p = simplified("S1xS2");
    EXPECT_EQ(p.to_string(), "<1;>");
    EXPECT_EQ(abelianization(p).rank, 1u);
}

TEST(EdgePath, DisconnectedInputRejected) {
    const auto two = disjoint_union(generator("S3"), generator("S3"));
    EXPECT_THROW(edge_path_presentation(two), Error);
}

TEST(Tietze, Examples) {
    EXPECT_EQ(tietze_simplify(P("<1; a>")).to_string(), "<0;>");
    EXPECT_EQ(tietze_simplify(P("<2; b>")).to_string(), "<1;>");
    EXPECT_LE(total_length(tietze_simplify(P("<3; abC, aab>"))), total_length(P("<3; abC, aab>")));
}

TEST(Tietze, PreservesAbelianization) {
    for (auto text : {"<3; abC, aab>", "<2; aaBB, abAB>", "<4; abcd, aB, cD, cccc>"}) {
        EXPECT_EQ(abelianization(tietze_simplify(P(text))), abelianization(P(text))) << text;
    }
}

TEST(ToddCoxeter, CyclicGroups) {
    const auto r = todd_coxeter(P("<1; aaaaa>"));
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.cosets, 5u);
    EXPECT_EQ(todd_coxeter(P("<1; a>")).cosets, 1u);
}

TEST(ToddCoxeter, FreeGroupExceedsLimit) {
    const auto r = todd_coxeter(P("<2; >"), 1000);
    EXPECT_FALSE(r.complete);
}

TEST(ToddCoxeter, KnownFiniteOrders) {
    EXPECT_EQ(todd_coxeter(P("<2; aa, bbb, abab>")).cosets, 6u);        // S3
    EXPECT_EQ(todd_coxeter(P("<2; aaaa, aaBB, abAb>")).cosets, 8u);     // Q8
    EXPECT_EQ(todd_coxeter(P("<2; abab, aaa, bbbbb>")).cosets, 60u);   // A5
    EXPECT_EQ(todd_coxeter(P("<2; ababAAA, aaaBBBBB>")).cosets, 120u);  // binary icosahedral
    // a^2 = b^3 = (ab)^5 is a Z/19 extension of it.
    EXPECT_EQ(todd_coxeter(P("<2; aaBBB, aaBABABABABA>")).cosets, 2280u);
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify(P("<2; >")).tag, Pi1Tag::Free);
    EXPECT_EQ(classify(P("<2; >")).value, 2u);
    const auto c2 = classify(P("<1; aa>"));
    EXPECT_EQ(c2.tag, Pi1Tag::Finite);
    EXPECT_EQ(c2.value, 2u);
    EXPECT_EQ(classify(P("<1; a>")).tag, Pi1Tag::Trivial);
    const auto rp2s1 = classify(simplified("RP2xS1"));
    EXPECT_EQ(rp2s1.tag, Pi1Tag::InfiniteNonFree);
    EXPECT_FALSE(rp2s1.evidence.empty());
}

TEST(Classify, GeneratedManifolds) {
    EXPECT_EQ(classify(simplified("T3")).tag, Pi1Tag::InfiniteNonFree);
    EXPECT_EQ(classify(simplified("S1~S2")).to_string(), "free(1)");
    EXPECT_EQ(classify(simplified("L(7,3)")).to_string(), "finite(7)");
    EXPECT_EQ(classify(simplified("S1xS2 # S1xS2")).to_string(), "free(2)");
}

TEST(Classify, NeverClaimsFreeWithTorsion) {
    // Unknown is allowed for hard cases, a wrong tag is not.
    const auto c = classify(simplified("RP3 # RP3"));
    EXPECT_TRUE(c.tag == Pi1Tag::Unknown || c.tag == Pi1Tag::InfiniteNonFree) << c.to_string();
}

TEST(HomsToS3, Counts) {
    EXPECT_EQ(count_homs_to_s3(P("<1;>")), 6u);
    EXPECT_EQ(count_homs_to_s3(P("<2; >")), 36u);
    EXPECT_EQ(count_homs_to_s3(P("<1; aa>")), 4u);
    EXPECT_EQ(count_homs_to_s3(P("<2; abAB>")), 18u);
}
