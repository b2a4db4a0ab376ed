#pragma once

// Exact linear algebra over Z (GMP integers) and over Z/m, and the
// (co)homology computations built on it.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lscat/delta_complex.hpp"

namespace lscat {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(Index n);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    mpz_class& operator()(Index r, Index c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(Index r, Index c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    bool is_zero() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<mpz_class> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
mpz_class determinant(const IntMatrix& a);

/// diagonal = left * input * right, diagonal entries non-negative and forming
/// a divisibility chain; left and right are unimodular.
struct SmithForm {
    IntMatrix diagonal;
    IntMatrix left;
    IntMatrix right;
    IntMatrix left_inverse;
    IntMatrix right_inverse;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Nonzero invariant factors only (no transforms); cheaper than the full form.
std::vector<mpz_class> invariant_factors(const IntMatrix& a);

/// True when every diagonal entry divides the next and off-diagonal entries vanish.
bool is_smith_form(const IntMatrix& d);

// ---------------------------------------------------------------------------
// Homology

/// Boundary map C_k -> C_{k-1} (rows: (k-1)-simplices, cols: k-simplices).
IntMatrix boundary_matrix(const DeltaComplex& complex, int k);

/// One degree of a finitely generated abelian group (or Z/m-module):
/// `rank` copies of the coefficient ring plus cyclic torsion summands.
struct HomologyGroup {
    Index rank = 0;
    std::vector<mpz_class> torsion;  ///< invariant factors > 1, divisibility chain

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyGroups {
    std::uint32_t modulus = 0;  ///< 0 for integer coefficients
    std::vector<HomologyGroup> degrees;

    /// One line per degree, e.g. "H1 = Z + Z/2".
    std::string to_string() const;
    friend bool operator==(const HomologyGroups&, const HomologyGroups&) = default;
};

std::string format_group(const HomologyGroup& group, std::uint32_t modulus);

/// Coefficients Z (modulus 0), Z/p via ranks, composite Z/m via the integral
/// Smith form and universal coefficients.
HomologyGroups homology(const DeltaComplex& complex, std::uint32_t modulus = 0);
HomologyGroup integral_homology_degree(const DeltaComplex& complex, int k);

/// Dimension of H^0 (number of connected components).
Index betti0(const DeltaComplex& complex);

/// Abelian group presented by integer relation rows over `generators` letters.
HomologyGroup cokernel_of_rows(const IntMatrix& relations);

/// Regroup cyclic orders (each > 1, entries equal to `full` counted as rank)
/// into an invariant-factor chain.
HomologyGroup group_from_cyclic_orders(const std::vector<mpz_class>& orders, std::uint32_t full);

// ---------------------------------------------------------------------------
// Z/m arithmetic and dense row echelon forms

bool is_prime(std::uint32_t n);
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce_mod(long value, std::uint32_t m);

using ModVector = std::vector<std::uint32_t>;

/// Rows kept in echelon form with distinct pivots; each row may carry a label.
class EchelonBasis {
public:
    static constexpr Index kNoLabel = static_cast<Index>(-1);

    EchelonBasis(Index width, std::uint32_t p) : width_(width), p_(p) {}

    Index width() const { return width_; }
    Index size() const { return rows_.size(); }
    std::uint32_t modulus() const { return p_; }

    /// Reduce v in place; on return v is zero iff it lies in the span.
    /// `label_coords` (if given, sized to the label count) accumulates the
    /// coefficients of labelled rows that were subtracted.
    void reduce(ModVector& v, ModVector* label_coords = nullptr) const;

    /// Adds the normalized residual of v; returns its row index, or nullopt
    /// if v was dependent.
    std::optional<Index> insert(ModVector v, Index label = kNoLabel);

    const ModVector& row(Index i) const { return rows_[i]; }

private:
    Index width_;
    std::uint32_t p_;
    std::vector<ModVector> rows_;
    std::vector<Index> pivots_;
    std::vector<Index> labels_;
};

/// Dense matrix over Z/p given as rows; rank and right nullspace.
Index rank_mod(std::vector<ModVector> rows, Index cols, std::uint32_t p);
std::vector<ModVector> nullspace_mod(std::vector<ModVector> rows, Index cols, std::uint32_t p);

/// Coboundary matrix delta_k : C^k -> C^{k+1} reduced mod m, as rows indexed
/// by (k+1)-simplices.
std::vector<ModVector> coboundary_rows(const DeltaComplex& complex, int k, std::uint32_t m);

/// Coboundary of a k-cochain with Z/m values.
ModVector coboundary(const DeltaComplex& complex, int k, std::span<const std::uint32_t> cochain,
                     std::uint32_t m);

// ---------------------------------------------------------------------------
// Cohomology bases

/// Per-degree cocycle representatives of H^k(X; Z/m). Over a prime the
/// representatives form a basis (orders all p); over a composite modulus they
/// generate, with the order of each generator reported.
class CohomologyBasis {
public:
    std::uint32_t modulus() const { return modulus_; }
    int top_degree() const { return static_cast<int>(reps_.size()) - 1; }
    const std::vector<ModVector>& representatives(int k) const { return reps_[k]; }
    const std::vector<std::uint32_t>& orders(int k) const { return orders_[k]; }
    Index dimension(int k) const { return reps_[k].size(); }

    /// Coordinates of the class of a cocycle in the chosen basis (prime
    /// modulus only). Throws InvalidArgument if `cocycle` is not a cocycle.
    ModVector coordinates(int k, ModVector cocycle) const;
    bool is_coboundary(int k, ModVector cocycle) const;

private:
    friend CohomologyBasis cohomology_basis(const DeltaComplex&, std::uint32_t);
    std::uint32_t modulus_ = 2;
    std::vector<std::vector<ModVector>> reps_;
    std::vector<std::vector<std::uint32_t>> orders_;
    std::vector<EchelonBasis> echelons_;  // coboundaries + reps, prime modulus only
};

/// Deterministic: coboundaries enter the echelon first, then cocycle
/// nullspace vectors in order; accepted residuals are the representatives.
CohomologyBasis cohomology_basis(const DeltaComplex& complex, std::uint32_t modulus);

}  // namespace lscat
