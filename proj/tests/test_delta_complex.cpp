#include <gtest/gtest.h>

#include <sstream>

#include "lscat/delta_complex.hpp"
#include "lscat/error.hpp"
#include "lscat/exact_algebra.hpp"
#include "support/oracles.hpp"

using namespace lscat;

namespace {

std::vector<std::vector<std::vector<Index>>> face_table(const DeltaComplex& c) {
    std::vector<std::vector<std::vector<Index>>> out(c.dim());
    for (int k = 1; k <= c.dim(); ++k) {
        for (Index s = 0; s < c.count(k); ++s) {
            auto f = c.faces(k, s);
            out[k - 1].emplace_back(f.begin(), f.end());
        }
    }
    return out;
}

std::string h(const DeltaComplex& c) { return oracle::format(oracle::homology(c)); }

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Validate, BoundaryOf4SimplexIsClosedOrientableSphere) {
    const auto r = validate(gen::simplex_boundary(3));
    EXPECT_TRUE(r.is_closed_pseudo_3_manifold);
    EXPECT_TRUE(r.connected);
    EXPECT_TRUE(r.orientable);
    EXPECT_EQ(r.euler_characteristic, 0);
    EXPECT_EQ(gen::simplex_boundary(3).count(3), 5u);
}

TEST(Validate, TorusGenerator) {
    const auto c = generator("T3");
    const auto r = validate(c);
    EXPECT_TRUE(r.is_closed_pseudo_3_manifold);
    EXPECT_TRUE(r.orientable);
    EXPECT_EQ(r.euler_characteristic, 0);
    EXPECT_EQ(c.count(3), 6u);
}

TEST(Validate, DanglingTriangleIsReported) {
    auto table = face_table(gen::s3());
    table[1].push_back(table[1][0]);
    const DeltaComplex c(gen::s3().count(0), table);
    const auto r = validate(c);
    EXPECT_FALSE(r.is_closed_pseudo_3_manifold);
    ASSERT_EQ(r.offending_faces.size(), 1u);
    EXPECT_EQ(r.offending_faces[0], c.count(2) - 1);
}

TEST(DeltaComplexCtor, RejectsBrokenIdentity) {
    // Triangle whose edges do not close up.
    EXPECT_EQ(code_of([] { DeltaComplex(3, {{{1, 0}, {2, 0}, {2, 1}}, {{2, 2, 2}}}); }), ErrorCode::MalformedComplex);
    EXPECT_EQ(code_of([] { DeltaComplex(2, {{{5, 0}}}); }), ErrorCode::MalformedComplex);
}

TEST(DeltaComplex, FrontAndBackFacesOfSimplex) {
    const auto c = gen::simplex_boundary(3);
    for (Index s = 0; s < c.count(3); ++s) {
        const auto v = c.vertices(3, s);
        const auto front = c.vertices(1, c.front_face(3, s, 1));
        const auto back = c.vertices(2, c.back_face(3, s, 1));
        EXPECT_EQ(front, (std::vector<Index>{v[0], v[1]}));
        EXPECT_EQ(back, (std::vector<Index>{v[1], v[2], v[3]}));
    }
}

TEST(Generator, S3IsBoundaryOf4Simplex) {
    EXPECT_EQ(generator("S3"), gen::simplex_boundary(3));
    EXPECT_EQ(h(generator("S3")), "Z; 0; 0; Z");
}

TEST(Generator, LensFiveOne) {
    const int params[] = {5, 1};
    EXPECT_EQ(h(generator("L", params)), "Z; Z/5; 0; Z");
}

TEST(Generator, TwistedBundleIsNonOrientableWithInfiniteCyclicH1) {
    const auto c = generator("S1~S2");
    EXPECT_FALSE(validate(c).orientable);
    EXPECT_EQ(oracle::format(oracle::homology(c)[1]), "Z");
}

TEST(Generator, Errors) {
    EXPECT_EQ(code_of([] { generator("K3"); }), ErrorCode::UnknownGenerator);
    EXPECT_EQ(code_of([] { generator("Poinc"); }), ErrorCode::NoTriangulation);
    EXPECT_EQ(code_of([] { generator("Q8"); }), ErrorCode::NoTriangulation);
    const int bad_gcd[] = {4, 2}, small[] = {1, 0}, zero_q[] = {5, 0};
    EXPECT_EQ(code_of([&] { generator("L", bad_gcd); }), ErrorCode::BadLensParams);
    EXPECT_EQ(code_of([&] { generator("L", small); }), ErrorCode::BadLensParams);
    EXPECT_EQ(code_of([&] { generator("L", zero_q); }), ErrorCode::BadLensParams);
}

TEST(Generator, OrientabilityFlags) {
    for (auto name : {"S3", "S1xS2", "T3", "RP3"}) EXPECT_TRUE(validate(generator(name)).orientable) << name;
    for (auto name : {"S1~S2", "RP2xS1"}) EXPECT_FALSE(validate(generator(name)).orientable) << name;
}

TEST(ConnectedSum, SphereIsIdentityForHomology) {
    for (auto name : {"S1xS2", "S1~S2", "T3", "RP2xS1", "RP3"}) {
        EXPECT_EQ(h(connected_sum(generator("S3"), generator(name))), h(generator(name))) << name;
    }
}

TEST(ConnectedSum, TwoProjectiveSpaces) {
    const auto c = connected_sum(generator("RP3"), generator("RP3"));
    EXPECT_EQ(oracle::format(oracle::homology(c)[1]), "Z/2 + Z/2");
}

TEST(ConnectedSum, TwoProductBundles) {
    const auto c = connected_sum(generator("S1xS2"), generator("S1xS2"));
    EXPECT_EQ(oracle::format(oracle::homology(c)[1]), "Z^2");
    EXPECT_TRUE(validate(c).is_closed_pseudo_3_manifold);
}

TEST(ConnectedSum, CommutativeOnH1) {
    const char* names[] = {"S1xS2", "T3", "RP2xS1", "RP3"};
    for (auto a : names) {
        for (auto b : names) {
            EXPECT_EQ(oracle::format(oracle::homology(connected_sum(generator(a), generator(b)))[1]),
                      oracle::format(oracle::homology(connected_sum(generator(b), generator(a)))[1]))
                << a << " # " << b;
        }
    }
}

TEST(ConnectedSum, RejectsOpenInput) {
    EXPECT_EQ(code_of([] { connected_sum(gen::interval(), generator("S3")); }), ErrorCode::NotClosed);
}

TEST(Product, CircleTimesCircleIsTorus) {
    const auto t = product(gen::circle(), gen::circle());
    EXPECT_EQ(h(t), "Z; Z^2; Z");
    EXPECT_EQ(t.count(2), 2u);
}

TEST(Product, PointIsIdentity) {
    for (auto name : {"S3", "T3", "RP3"}) EXPECT_EQ(product(gen::point(), generator(name)), generator(name)) << name;
}

TEST(Product, ProjectivePlaneTimesCircle) {
    const auto c = product(gen::projective_plane(), gen::circle());
    EXPECT_EQ(oracle::format(oracle::homology(c)[1]), "Z + Z/2");
}

TEST(Product, ShuffleCountsAndDimensionCap) {
    const auto a = generator("RP3"), b = gen::circle();
    const auto p = product(a, b);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(p.count(k), shuffle_count(a, b, k)) << k;
    EXPECT_EQ(p.count(4), a.count(3) * 4);
    EXPECT_EQ(code_of([&] { product(generator("S3"), gen::sphere2()); }), ErrorCode::DimensionOverflow);
}

TEST(Dcx, RoundTrip) {
    for (auto name : {"S3", "T3", "RP2xS1", "S1~S2"}) {
        const auto c = generator(name);
        EXPECT_EQ(parse_dcx(to_dcx(c)), c) << name;
    }
}

TEST(Dcx, ParseErrorCarriesBytePosition) {
    const std::string text = "dcx 1\ndim 1\n0 2\n\n\n1 1\n0 x\n";
    try {
        parse_dcx(text);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), text.find("0 x") + 2);  // the bad token
    }
    EXPECT_THROW(parse_dcx("dcx 2\n"), ParseError);
}

TEST(Dcx, OutOfRangeFaceIsMalformed) {
    EXPECT_EQ(code_of([] { parse_dcx("dcx 1\ndim 1\n0 1\n\n1 1\n0 3\n"); }), ErrorCode::MalformedComplex);
}
