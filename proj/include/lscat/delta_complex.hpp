#pragma once

// Semi-simplicial (Delta) complexes: every k-simplex lists its k+1 faces,
// face i being the (k-1)-simplex obtained by dropping ordered vertex i.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lscat {

using Index = std::size_t;

class DeltaComplex {
public:
    DeltaComplex() = default;

    /// faces[k][s] lists the faces of k-simplex s, for k = 1..dim. Vertices
    /// carry no face data, so only their count is given. Throws
    /// MalformedComplex on out-of-range faces, empty dimensions or a violated
    /// simplicial identity.
    DeltaComplex(Index vertex_count, std::vector<std::vector<std::vector<Index>>> faces);

    int dim() const { return static_cast<int>(faces_.size()); }
    Index count(int k) const;
    Index total_count() const;

    Index face(int k, Index s, int i) const { return faces_[k - 1][s * (k + 1) + i]; }
    std::span<const Index> faces(int k, Index s) const {
        return {faces_[k - 1].data() + s * (k + 1), static_cast<std::size_t>(k + 1)};
    }

    /// Ordered vertex j of a k-simplex.
    Index vertex(int k, Index s, int j) const;
    std::vector<Index> vertices(int k, Index s) const;

    /// Face spanned by ordered vertices 0..r (repeatedly drop the last vertex).
    Index front_face(int k, Index s, int r) const;
    /// Face spanned by ordered vertices r..k (repeatedly drop the first vertex).
    Index back_face(int k, Index s, int r) const;

    int euler_characteristic() const;

    /// First violated identity face_i(face_j(s)) == face_{j-1}(face_i(s)), i < j.
    std::optional<std::string> find_identity_violation() const;

    friend bool operator==(const DeltaComplex&, const DeltaComplex&) = default;

private:
    Index vertex_count_ = 0;
    // faces_[k-1] is the flat face table of the k-simplices, k+1 entries each.
    std::vector<std::vector<Index>> faces_;
};

struct ClosedCheckReport {
    int dimension = 0;
    bool is_closed_pseudo_3_manifold = false;
    /// Every codimension-one simplex lies in exactly two top simplices (any dimension).
    bool is_closed_pseudomanifold = false;
    bool connected = false;
    bool orientable = false;
    int euler_characteristic = 0;
    /// Codimension-one simplices whose top-simplex incidence is not two.
    std::vector<Index> offending_faces;
};

/// Closedness, connectivity (rank of H^0), orientability (H_top(X;Z) = Z) and
/// Euler characteristic. Throws MalformedComplex if identities fail.
ClosedCheckReport validate(const DeltaComplex& complex);

/// Top-simplex orientation signs making the sum a cycle, if the complex is a
/// connected orientable closed pseudomanifold; nullopt otherwise.
std::optional<std::vector<int>> orientation_signs(const DeltaComplex& complex);

// ---------------------------------------------------------------------------
// Construction helpers

/// Ordered simplicial complex from vertex tuples (ordered per simplex). Faces
/// are created on demand and shared between simplices with equal tuples.
DeltaComplex from_vertex_tuples(Index vertex_count, const std::vector<std::vector<Index>>& tops);

/// Pairs of equal-dimension simplices glued by the order-preserving map; the
/// identification is closed under faces.
struct Identification {
    int dim;
    Index a;
    Index b;
};
DeltaComplex quotient(const DeltaComplex& complex, const std::vector<Identification>& glue);

DeltaComplex disjoint_union(const DeltaComplex& a, const DeltaComplex& b);

/// Drop top-dimensional simplices (the remaining indices keep their order).
DeltaComplex remove_top_simplices(const DeltaComplex& complex, std::vector<Index> removed);

// ---------------------------------------------------------------------------
// Products

/// A simplex of A x B: simplex a of A, simplex b of B and the lattice path
/// through their vertex grid (step codes: 1 = advance in A, 2 = advance in B,
/// 3 = advance in both).
struct ProductCell {
    int a_dim;
    Index a;
    int b_dim;
    Index b;
    std::vector<std::uint8_t> steps;
};

struct ProductComplex {
    DeltaComplex complex;
    std::vector<std::vector<ProductCell>> cells;  // cells[k][s]

    /// Pull back a k-cochain of the first (second) factor along the projection;
    /// degenerate images evaluate to zero.
    std::vector<std::uint32_t> pullback_first(int k, std::span<const std::uint32_t> cochain) const;
    std::vector<std::uint32_t> pullback_second(int k, std::span<const std::uint32_t> cochain) const;
};

/// Staircase (shuffle) triangulation of |A| x |B|. Throws DimensionOverflow if
/// dim A + dim B > 4.
ProductComplex product_with_cells(const DeltaComplex& a, const DeltaComplex& b);
DeltaComplex product(const DeltaComplex& a, const DeltaComplex& b);

/// Number of k-simplices the shuffle construction produces.
Index shuffle_count(const DeltaComplex& a, const DeltaComplex& b, int k);

// ---------------------------------------------------------------------------
// Connected sum

/// Replaces top simplex `tet` of a 3-complex by 13 tetrahedra: an inner
/// tetrahedron on four new vertices plus a collar. Returns the complex and the
/// index of the inner tetrahedron, whose boundary is an embedded 2-sphere.
std::pair<DeltaComplex, Index> subdivide_with_inner_tetrahedron(const DeltaComplex& complex,
                                                                Index tet);

/// Remove the inner tetrahedron of each summand and glue the boundary spheres
/// face-by-face. Throws NotClosed if either input is not a closed connected
/// 3-complex.
DeltaComplex connected_sum(const DeltaComplex& a, const DeltaComplex& b);

// ---------------------------------------------------------------------------
// Generators

namespace gen {
DeltaComplex point();
DeltaComplex circle();            ///< one vertex, one edge
DeltaComplex interval();          ///< standard 1-simplex
DeltaComplex sphere2();           ///< two triangles glued along their boundary
DeltaComplex projective_plane();  ///< two triangles, antipodal square
DeltaComplex simplex_boundary(int n);  ///< boundary of the standard (n+1)-simplex
DeltaComplex s3();
DeltaComplex s1xs2();
DeltaComplex s1_twisted_s2();
DeltaComplex torus3();
DeltaComplex rp2xs1();
DeltaComplex lens(int p, int q);
}  // namespace gen

/// Catalog names S3, S1xS2, S1~S2, T3, RP2xS1, L (with p, q); also the helper
/// spaces point, S1, S2, RP2. Throws UnknownGenerator, BadLensParams, or
/// NoTriangulation for catalog-only primes (Poinc, Q8).
DeltaComplex generator(const std::string& name, std::span<const int> params = {});

// ---------------------------------------------------------------------------
// DCX text format

void write_dcx(std::ostream& out, const DeltaComplex& complex);
std::string to_dcx(const DeltaComplex& complex);
/// Throws ParseError (with byte position) on syntax errors and MalformedComplex
/// on out-of-range indices or identity violations.
DeltaComplex parse_dcx(std::string_view text);
DeltaComplex read_dcx_file(const std::string& path);

}  // namespace lscat
