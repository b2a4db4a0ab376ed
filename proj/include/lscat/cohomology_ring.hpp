#pragma once

// Cup products on Delta complexes and finite cohomology ring tables over Z/p.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lscat/delta_complex.hpp"
#include "lscat/exact_algebra.hpp"

namespace lscat {

/// Alexander-Whitney product: (a u b)(s) = a(front_p s) * b(back_q s) mod m.
/// Throws DegreeOverflow if p + q > dim.
ModVector cup_product(const DeltaComplex& complex, int p, std::span<const std::uint32_t> a, int q,
                      std::span<const std::uint32_t> b, std::uint32_t m);

/// Evaluation of a top cocycle on the fundamental cycle: the plain sum of top
/// simplices for m = 2, the oriented sum otherwise. Throws NotClosed if the
/// complex is not a closed pseudomanifold, NonOrientable if m > 2 and no
/// orientation exists.
std::uint32_t kronecker_top(const DeltaComplex& complex, std::span<const std::uint32_t> cocycle,
                            std::uint32_t m);

/// A graded class: coordinates in the basis of one degree.
struct RingElement {
    int degree = 0;
    ModVector coords;
};

class CohomologyRing {
public:
    CohomologyRing() = default;
    CohomologyRing(std::uint32_t modulus, std::vector<std::vector<std::string>> labels);

    std::uint32_t modulus() const { return modulus_; }
    int top_degree() const { return static_cast<int>(labels_.size()) - 1; }
    Index dimension(int k) const;
    const std::string& label(int k, Index i) const { return labels_[k][i]; }

    /// Coordinates of basis(k, i) u basis(l, j) in degree k + l (all zero
    /// beyond the top degree has no entries).
    const ModVector& product(int k, Index i, int l, Index j) const;
    void set_product(int k, Index i, int l, Index j, ModVector coords);

    RingElement basis(int k, Index i) const;
    RingElement multiply(const RingElement& a, const RingElement& b) const;
    bool is_zero(const RingElement& a) const;

    /// Values of the fundamental pairing on the top-degree basis, if defined.
    const std::optional<ModVector>& pairing() const { return pairing_; }
    void set_pairing(ModVector values) { pairing_ = std::move(values); }
    std::optional<std::uint32_t> evaluate(const RingElement& top) const;

    /// H^k x H^{top-k} -> Z/p is a perfect pairing in every degree.
    bool pairing_nondegenerate() const;

    /// Unit and associativity on basis triples.
    bool is_associative() const;

private:
    std::uint32_t modulus_ = 2;
    std::vector<std::vector<std::string>> labels_;
    // table_[k][l][i * dim(l) + j]
    std::vector<std::vector<std::vector<ModVector>>> table_;
    std::optional<ModVector> pairing_;
};

/// Ring of a complex over a prime field, on the basis of cohomology_basis.
/// The pairing is attached when the complex is a closed pseudomanifold and
/// either p = 2 or it is orientable. Throws CompositeModulus for composite m.
CohomologyRing ring_table(const DeltaComplex& complex, std::uint32_t p);

/// Ring of S^n (n = 0 gives the point) over Z/p.
CohomologyRing sphere_ring(int n, std::uint32_t p);

/// Graded tensor product with sign (-1)^{|b||c|}. Throws ModulusMismatch or
/// CompositeModulus.
CohomologyRing kunneth_tensor(const CohomologyRing& a, const CohomologyRing& b);

struct CupLengthWitness {
    /// Factors as (degree, basis index) pairs, multiplied left to right.
    std::vector<std::pair<int, Index>> factors;
    RingElement product_class;
    int length = 0;
};

/// Exact cup-length over the ring by dynamic programming over the spans of
/// k-fold products in each degree. Length 0 (no witness factors) if every
/// positive-degree class vanishes.
CupLengthWitness cup_length(const CohomologyRing& ring);

/// Multiply a witness out again; true iff the product is the stated nonzero class.
bool witness_holds(const CohomologyRing& ring, const CupLengthWitness& w);

std::string format_witness(const CohomologyRing& ring, const CupLengthWitness& w);

/// Human-readable table: basis per degree and nonzero products.
std::string format_ring(const CohomologyRing& ring);

}  // namespace lscat
