#pragma once

// LS category, detectability and Ganea verification with checkable
// certificates.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lscat/delta_complex.hpp"
#include "lscat/manifold_algebra.hpp"

namespace lscat {

enum class Rule { R1, R2, R3, R4, R5, COVER, THEOREM, DIM, PUSHOUT, PRODUCT, SPHERE };
enum class PremiseTag { Verified, CatalogFact };

std::string rule_name(Rule r);

struct CertNode {
    Rule rule = Rule::R1;
    int bound = 0;
    PremiseTag premise = PremiseTag::CatalogFact;
    std::string ref;
    std::string uses;  ///< premise id ("P3") or empty
    std::vector<CertNode> children;
};

/// A numeric claim the checker recomputes. Space strings: an expression,
/// "file:<path>", "<space> x S1" (triangulated product) or "<space> (x) S<n>"
/// (Kunneth tensor ring).
enum class PremiseKind {
    Product,        ///< the cup product of the listed basis classes is nonzero
    TopClass,       ///< H^top(space; Z/m) has an element of order m
    CrossProduct,   ///< top class of M times the circle class is nonzero on M x S1
    TensorProduct,  ///< top class of M times the sphere class is nonzero in M (x) S<n>
    CupLength,      ///< cl over Z/p equals value
};

struct Premise {
    std::string id;
    PremiseKind kind = PremiseKind::Product;
    std::string space;
    std::uint32_t coeffs = 2;
    std::vector<std::string> factors;
    int value = 0;
};

enum class DetectStatus { Detectable, Unknown, NotApplicable };

struct DetectRoute {
    std::string coefficients;  ///< "Z/2", "Z/5"
    std::string description;
};

struct Detection {
    DetectStatus status = DetectStatus::NotApplicable;
    std::vector<DetectRoute> routes;
    std::string reason;
};

struct Certificate {
    std::string subject;
    int lo = 1;
    int hi = 3;
    std::optional<int> value;  ///< present iff lo == hi
    CertNode upper;
    CertNode lower;
    std::vector<Premise> premises;
    std::vector<std::string> notes;

    std::string to_text() const;
};

/// Inverse of Certificate::to_text. Throws ParseError.
Certificate parse_certificate(std::string_view text);

struct CatResult {
    Certificate cert;
    Detection detect;
};

/// Category of a normalized expression.
CatResult ls_category(const ManifoldExpr& e);

/// Category bounds for a raw closed 3-complex. `space` names the complex in
/// certificate premises (normally "file:<path>").
CatResult ls_category(const DeltaComplex& complex, const std::string& space);

Detection detectability(const ManifoldExpr& e);

/// cat(M x S^n) with a product-inequality upper trace and a Kunneth or
/// triangulated lower trace. n >= 1.
CatResult verify_ganea(const ManifoldExpr& e, int n);

enum class DegreeOneVerdict { Consistent, NoDegreeOneMap };

struct DegreeOneResult {
    DegreeOneVerdict verdict = DegreeOneVerdict::Consistent;
    int cat_source = 0;
    int cat_target = 0;
    std::string explanation;
};

/// Throws NonOrientable unless both expressions are orientable.
DegreeOneResult degree_one_consequences(const ManifoldExpr& source, const ManifoldExpr& target);

struct CheckReport {
    bool ok = true;
    std::vector<std::string> errors;
    std::vector<std::string> catalog_facts;  ///< unverified leaves, for audit
};

/// Re-checks rule arithmetic, premise references and every Verified premise
/// from scratch. `jobs` > 1 recomputes premises in parallel.
CheckReport check_certificate(const Certificate& cert, unsigned jobs = 1);

/// Recompute one premise; false with a reason on failure.
bool evaluate_premise(const Premise& p, std::string* why = nullptr);

std::string format_detection(const Detection& d);

/// "cat = 3" (or the interval) and the two root trace lines.
std::string format_summary(const Certificate& cert, const std::string& quantity = "cat");

}  // namespace lscat
