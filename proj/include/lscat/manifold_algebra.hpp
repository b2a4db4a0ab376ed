#pragma once

// Connected-sum expressions over a catalog of prime closed 3-manifolds.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lscat/delta_complex.hpp"
#include "lscat/exact_algebra.hpp"
#include "lscat/pi1.hpp"

namespace lscat {

/// Declaration order is the canonical summand order (S3 first, only ever alone).
enum class PrimeKind { S3, S1xS2, S1TwistedS2, Lens, T3, RP2xS1, Q8, Poinc };

struct Summand {
    PrimeKind kind = PrimeKind::S3;
    int p = 0;  ///< lens parameters, zero otherwise
    int q = 0;

    std::string to_string() const;
    friend auto operator<=>(const Summand&, const Summand&) = default;
};

struct PrimeRecord {
    std::string key;
    Pi1Tag pi1 = Pi1Tag::Trivial;
    std::uint64_t pi1_value = 0;  ///< rank if free, order if finite
    bool orientable = true;
    bool irreducible = true;
    bool aspherical = false;
    bool pi2_zero = true;
    bool has_odd_torsion = false;
    bool triangulable = true;
    HomologyGroup h1;
};

/// Fixed entries, with the lens family represented by L(p,q) at p = 0.
const std::vector<PrimeRecord>& catalog();
PrimeRecord record(const Summand& s);

/// Empty string when every record invariant holds, otherwise the first failure.
std::string catalog_self_test(const std::vector<PrimeRecord>& records);

/// Whitespace-separated table, one record per line after a header line;
/// the lens family row uses the symbols p and odd(p).
std::string dump_catalog();
std::vector<PrimeRecord> load_catalog(std::string_view text);

struct ManifoldExpr {
    std::vector<Summand> summands;

    /// Summands joined by " # "; L(2,1) prints as RP3.
    std::string to_string() const;
    friend bool operator==(const ManifoldExpr&, const ManifoldExpr&) = default;
};

/// expr := term { "#" term }; term := S3 | S1xS2 | S1~S2 | T3 | RP2xS1 | RP3 |
/// L(int,int) | Poinc | Q8. Throws ParseError (byte position) or BadLensParams.
ManifoldExpr parse_expr(std::string_view text);

/// Drop S3 unless it is the only summand, reduce lens q mod p, sort.
ManifoldExpr normalize(ManifoldExpr e);

struct ExprFacts {
    Pi1Tag pi1 = Pi1Tag::Trivial;
    std::uint64_t pi1_value = 0;
    bool orientable = true;
    bool has_odd_torsion = false;
    bool triangulable = true;
    /// Non-orientable with a prime summand carrying odd torsion.
    bool exceptional_shape = false;
    HomologyGroup h1;

    std::string pi1_text() const;
};

ExprFacts facts(const ManifoldExpr& e);

/// Iterated connected sum of the generator complexes. Throws NoTriangulation.
DeltaComplex triangulate_expr(const ManifoldExpr& e);

/// Orientation double cover of a non-orientable expression, normalized.
/// Throws InvalidArgument for orientable input.
ManifoldExpr orientable_double_cover(const ManifoldExpr& e);

/// Orientation reversal, tracked for lens spaces only: -L(p,q) = L(p,p-q).
/// Other catalog keys carry no orientation and map to themselves.
Summand mirror(const Summand& s);

}  // namespace lscat
