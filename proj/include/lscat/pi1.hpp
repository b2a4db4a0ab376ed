#pragma once

// Fundamental groups: edge-path presentations, Tietze simplification,
// Todd-Coxeter enumeration and a sound three-valued classification.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lscat/delta_complex.hpp"
#include "lscat/exact_algebra.hpp"

namespace lscat {

/// Letters are +-(g + 1) for generator g; negative means inverse.
using Word = std::vector<int>;

struct GroupPresentation {
    int generators = 0;
    std::vector<Word> relators;

    /// `<2; aBAb, aa>`: lowercase a..z, uppercase inverse; beyond 26
    /// generators the tokens are x<k> and X<k> (k zero-based).
    std::string to_string() const;
    friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Inverse of to_string. Throws ParseError with the byte position.
GroupPresentation parse_presentation(std::string_view text);

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
std::size_t total_length(const GroupPresentation& p);

/// Generators are the edges outside a BFS spanning tree rooted at vertex 0;
/// one relator per triangle (face2 . face0 . face1^-1). Throws NotConnected.
GroupPresentation edge_path_presentation(const DeltaComplex& complex);

/// Tietze moves that never increase the total relator length: reduction,
/// duplicate removal, generator elimination and half-relator substitution.
/// Deterministic; stops after `budget` moves.
GroupPresentation tietze_simplify(GroupPresentation p, std::size_t budget = 10000);

struct CosetEnumeration {
    bool complete = false;
    Index cosets = 0;   ///< index of the trivial subgroup when complete
    Index defined = 0;  ///< cosets defined in total
};

/// HLT coset enumeration over the trivial subgroup.
CosetEnumeration todd_coxeter(const GroupPresentation& p, Index max_cosets = 100000);

/// Abelianization as rank plus invariant factors.
HomologyGroup abelianization(const GroupPresentation& p);

/// |Hom(G, S3)| by exhaustive assignment; at most 8 generators.
std::uint64_t count_homs_to_s3(const GroupPresentation& p);

enum class Pi1Tag { Trivial, Free, Finite, InfiniteNonFree, Unknown };

struct Pi1Class {
    Pi1Tag tag = Pi1Tag::Unknown;
    std::uint64_t value = 0;  ///< rank for Free, order for Finite
    std::string evidence;

    std::string to_string() const;
};

Pi1Class classify(const GroupPresentation& p, Index max_cosets = 100000);

}  // namespace lscat
