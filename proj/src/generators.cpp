#include <numeric>

#include "lscat/delta_complex.hpp"
#include "lscat/error.hpp"

namespace lscat::gen {

DeltaComplex point() { return DeltaComplex(1, {}); }

DeltaComplex circle() { return DeltaComplex(1, {{{0, 0}}}); }

DeltaComplex interval() { return DeltaComplex(2, {{{1, 0}}}); }

DeltaComplex sphere2() {
    // Edges 01, 02, 12; both triangles have faces (12, 02, 01).
    return DeltaComplex(3, {{{1, 0}, {2, 0}, {2, 1}}, {{2, 1, 0}, {2, 1, 0}}});
}

DeltaComplex projective_plane() {
    // Vertices V = 0, W = 1; edges a, b run V -> W, c is a loop at V.
    return DeltaComplex(2, {{{1, 0}, {1, 0}, {0, 0}}, {{1, 0, 2}, {0, 1, 2}}});
}

DeltaComplex simplex_boundary(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "sphere dimension must be positive");
    const Index verts = static_cast<Index>(n) + 2;
    std::vector<std::vector<Index>> tops;
    for (Index skip = verts; skip-- > 0;) {
        std::vector<Index> t;
        for (Index v = 0; v < verts; ++v) {
            if (v != skip) t.push_back(v);
        }
        tops.push_back(std::move(t));
    }
    return from_vertex_tuples(verts, tops);
}

DeltaComplex s3() { return simplex_boundary(3); }

DeltaComplex s1xs2() { return product(circle(), sphere2()); }

DeltaComplex torus3() { return product(product(circle(), circle()), circle()); }

DeltaComplex rp2xs1() { return product(projective_plane(), circle()); }

DeltaComplex s1_twisted_s2() {
    // S^2 x [0,1] with (s, 1) glued to (f s, 0), f swapping the two triangles.
    ProductComplex pc = product_with_cells(sphere2(), interval());
    auto find = [&](Index tri, Index end) {
        for (Index s = 0; s < pc.cells[2].size(); ++s) {
            const auto& c = pc.cells[2][s];
            if (c.a_dim == 2 && c.a == tri && c.b_dim == 0 && c.b == end) return s;
        }
        throw Error(ErrorCode::MalformedComplex, "missing end triangle");
    };
    std::vector<Identification> glue;
    for (Index t = 0; t < 2; ++t) glue.push_back({2, find(t, 1), find(1 - t, 0)});
    return quotient(pc.complex, glue);
}

DeltaComplex lens(int p, int q) {
    if (p < 2 || q < 1 || q >= p || std::gcd(p, q) != 1) {
        throw Error(ErrorCode::BadLensParams,
                    "L(" + std::to_string(p) + "," + std::to_string(q) + ") needs p >= 2, 0 < q < p, gcd 1");
    }
    // Bipyramid over a p-gon: north N = 0, south S = 1, equator a_i = 2 + i.
    const Index P = static_cast<Index>(p);
    std::vector<std::vector<Index>> tops;
    for (Index i = 0; i < P; ++i) tops.push_back({0, 1, 2 + i, 2 + (i + 1) % P});
    DeltaComplex ball = from_vertex_tuples(P + 2, tops);
    // Upper face (N, a_i, a_{i+1}) goes to lower face (S, a_{i+q}, a_{i+q+1}).
    std::vector<Identification> glue;
    for (Index i = 0; i < P; ++i) {
        glue.push_back({2, ball.face(3, i, 1), ball.face(3, (i + static_cast<Index>(q)) % P, 0)});
    }
    return quotient(ball, glue);
}

}  // namespace lscat::gen

namespace lscat {

DeltaComplex generator(const std::string& name, std::span<const int> params) {
    auto no_params = [&] {
        if (!params.empty()) {
            throw Error(ErrorCode::InvalidArgument, name + " takes no parameters");
        }
    };
    if (name == "L") {
        if (params.size() != 2) throw Error(ErrorCode::BadLensParams, "L needs two parameters p, q");
        return gen::lens(params[0], params[1] % std::max(params[0], 1));
    }
    if (name == "RP3") {
        no_params();
        return gen::lens(2, 1);
    }
    if (name == "Poinc" || name == "Q8") {
        throw Error(ErrorCode::NoTriangulation, name + " has no built-in triangulation");
    }
    no_params();
    if (name == "S3") return gen::s3();
    if (name == "S1xS2") return gen::s1xs2();
    if (name == "S1~S2") return gen::s1_twisted_s2();
    if (name == "T3") return gen::torus3();
    if (name == "RP2xS1") return gen::rp2xs1();
    if (name == "point") return gen::point();
    if (name == "S1") return gen::circle();
    if (name == "S2") return gen::sphere2();
    if (name == "RP2") return gen::projective_plane();
    throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + name + "'");
}

}  // namespace lscat
