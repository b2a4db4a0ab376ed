#include "lscat/delta_complex.hpp"
#include "lscat/error.hpp"

namespace lscat {

namespace {

// Local vertex order v0 < v1 < v2 < v3 < c0 < c1 < c2 < c3. The inner
// tetrahedron comes first; each outer face (va, vb, vd) gets a three-tetrahedron
// prism down to (ca, cb, cd).
DeltaComplex collar_block() {
    std::vector<std::vector<Index>> tops{{4, 5, 6, 7}};
    for (int missing = 3; missing >= 0; --missing) {
        std::vector<Index> f;
        for (Index v = 0; v < 4; ++v) {
            if (static_cast<int>(v) != missing) f.push_back(v);
        }
        const Index va = f[0], vb = f[1], vd = f[2];
        const Index ca = va + 4, cb = vb + 4, cd = vd + 4;
        tops.push_back({va, vb, vd, cd});
        tops.push_back({va, vb, cb, cd});
        tops.push_back({va, ca, cb, cd});
    }
    return from_vertex_tuples(8, tops);
}

// Triangle of the block spanned by the outer vertices other than v_i, which
// equals face i of the outer tetrahedron (v0 v1 v2 v3).
Index outer_face(const DeltaComplex& block, int i) {
    for (Index t = 0; t < block.count(2); ++t) {
        auto vs = block.vertices(2, t);
        bool ok = true;
        int slot = 0;
        for (Index v = 0; v < 4 && ok; ++v) {
            if (static_cast<int>(v) == i) continue;
            ok = vs[slot++] == v;
        }
        if (ok) return t;
    }
    throw Error(ErrorCode::MalformedComplex, "collar block lacks an outer face");
}

void require_closed(const DeltaComplex& x, const char* which) {
    if (x.dim() != 3) {
        throw Error(ErrorCode::NotClosed, std::string(which) + " summand is not 3-dimensional");
    }
    auto report = validate(x);
    if (!report.is_closed_pseudo_3_manifold || !report.connected) {
        throw Error(ErrorCode::NotClosed, std::string(which) + " summand is not a closed connected 3-complex");
    }
}

}  // namespace

std::pair<DeltaComplex, Index> subdivide_with_inner_tetrahedron(const DeltaComplex& complex, Index tet) {
    if (complex.dim() != 3 || tet >= complex.count(3)) {
        throw Error(ErrorCode::InvalidArgument, "no such tetrahedron");
    }
    const DeltaComplex block = collar_block();
    const DeltaComplex rest = remove_top_simplices(complex, {tet});
    const Index inner = rest.count(3);
    DeltaComplex joined = disjoint_union(rest, block);
    std::vector<Identification> glue;
    for (int i = 0; i < 4; ++i) {
        glue.push_back({2, complex.face(3, tet, i), rest.count(2) + outer_face(block, i)});
    }
    return {quotient(joined, glue), inner};
}

DeltaComplex connected_sum(const DeltaComplex& a, const DeltaComplex& b) {
    require_closed(a, "first");
    require_closed(b, "second");
    auto [sa, ia] = subdivide_with_inner_tetrahedron(a, 0);
    auto [sb, ib] = subdivide_with_inner_tetrahedron(b, 0);
    std::vector<Index> fa(4), fb(4);
    for (int i = 0; i < 4; ++i) {
        fa[i] = sa.face(3, ia, i);
        fb[i] = sb.face(3, ib, i);
    }
    const DeltaComplex ra = remove_top_simplices(sa, {ia});
    const DeltaComplex rb = remove_top_simplices(sb, {ib});
    DeltaComplex joined = disjoint_union(ra, rb);
    std::vector<Identification> glue;
    for (int i = 0; i < 4; ++i) glue.push_back({2, fa[i], ra.count(2) + fb[i]});
    return quotient(joined, glue);
}

}  // namespace lscat
