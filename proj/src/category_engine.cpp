#include "lscat/category_engine.hpp"

#include <sstream>

#include "lscat/cohomology_ring.hpp"
#include "lscat/error.hpp"
#include "lscat/pi1.hpp"

namespace lscat {

namespace {

const char* const kRefR1 = "a nonzero class of positive degree has weight at least 1";
const char* const kRefR2 = "pullback along f with f*(u) nonzero keeps the weight of u";
const char* const kRefR3 = "the weight of a cup product is at least the sum of the weights";
const char* const kRefR4 = "on an aspherical space a nonzero class of degree s has weight at least s";
const char* const kRefR5 = "finite fundamental group of order d: every nonzero class in H^3(M;Z/d) has weight 3";
const char* const kRefR5Even = "finite fundamental group of even order: every nonzero class in H^3(M;Z/2) has weight 3";
const char* const kRefCover = "the category of a covering space is at most the category of the base";
const char* const kRefDim = "cat(X) <= dim(X) for a connected CW complex";
const char* const kRefPushout = "free fundamental group: M is a double mapping cylinder of two 1-dimensional complexes, so cat(M) <= 2";
const char* const kRefSphere = "a closed 3-manifold with trivial fundamental group is a homotopy sphere, covered by two contractible open sets";
const char* const kRefSphereN = "S^n is covered by two contractible open sets";
const char* const kRefProduct = "cat(X x Y) <= cat(X) + cat(Y)";
const char* const kRefSphereClass = "the generator of H^n(S^n) is nonzero";

class Builder {
public:
    /// Adds a premise after checking that it actually holds.
    std::string add(Premise p) {
        for (const auto& q : premises_) {
            if (q.kind == p.kind && q.space == p.space && q.coeffs == p.coeffs && q.factors == p.factors &&
                q.value == p.value) {
                return q.id;
            }
        }
        std::string why;
        if (!evaluate_premise(p, &why)) {
            throw Error(ErrorCode::InvalidArgument, "premise on '" + p.space + "' does not hold: " + why);
        }
        p.id = "P" + std::to_string(premises_.size() + 1);
        premises_.push_back(std::move(p));
        return premises_.back().id;
    }

    std::vector<Premise> take() { return std::move(premises_); }

private:
    std::vector<Premise> premises_;
};

CertNode fact(Rule r, int bound, std::string ref, std::vector<CertNode> children = {}) {
    return CertNode{r, bound, PremiseTag::CatalogFact, std::move(ref), {}, std::move(children)};
}

CertNode verified(Rule r, int bound, std::string ref, std::string uses, std::vector<CertNode> children = {}) {
    return CertNode{r, bound, PremiseTag::Verified, std::move(ref), std::move(uses), std::move(children)};
}

struct Route {
    CertNode node;
    std::uint32_t coeffs = 2;
    std::string description;
};

std::string zmod(std::uint32_t m) { return "Z/" + std::to_string(m); }

// R3 over a cup-length witness of `space` over Z/2, or nullopt if cl < need.
std::optional<CertNode> cup_length_node(Builder& b, const std::string& space, const DeltaComplex& x, int need) {
    const CohomologyRing ring = ring_table(x, 2);
    const CupLengthWitness w = cup_length(ring);
    if (w.length < need) return std::nullopt;
    std::vector<std::string> labels;
    for (auto [d, i] : w.factors) labels.push_back(ring.label(d, i));
    labels.resize(static_cast<std::size_t>(need));
    if (need == 1) {
        return verified(Rule::R1, 1, kRefR1, b.add({"", PremiseKind::Product, space, 2, labels, 0}));
    }
    std::vector<CertNode> kids;
    for (const auto& l : labels) {
        kids.push_back(verified(Rule::R1, 1, kRefR1, b.add({"", PremiseKind::Product, space, 2, {l}, 0})));
    }
    return verified(Rule::R3, need, kRefR3, b.add({"", PremiseKind::Product, space, 2, labels, 0}), std::move(kids));
}

CertNode top_class_node(Builder& b, Rule r, int bound, const std::string& ref, const std::string& space,
                        std::uint32_t m, bool triangulable, std::vector<CertNode> children = {}) {
    if (!triangulable) return fact(r, bound, ref, std::move(children));
    return verified(r, bound, ref, b.add({"", PremiseKind::TopClass, space, m, {}, 0}), std::move(children));
}

bool has_z2_route(const Summand& s) {
    const PrimeRecord r = record(s);
    if (s.kind == PrimeKind::T3 || s.kind == PrimeKind::RP2xS1) return true;
    return r.pi1 == Pi1Tag::Finite && r.pi1_value % 2 == 0;
}

// Detecting class of a single prime with weight equal to its category.
Route prime_route(Builder& b, const Summand& s, bool z2) {
    const std::string space = s.to_string();
    const PrimeRecord r = record(s);
    switch (r.pi1) {
        case Pi1Tag::Trivial:
            return {top_class_node(b, Rule::R1, 1, kRefR1, space, 2, true), 2, "top class of H^3(" + space + ";Z/2)"};
        case Pi1Tag::Free: {
            auto node = cup_length_node(b, space, triangulate_expr({{s}}), 2);
            if (!node) throw Error(ErrorCode::InvalidArgument, space + ": expected Z/2 cup-length 2");
            return {*node, 2, "cup-length 2 over Z/2 on " + space};
        }
        case Pi1Tag::Finite: {
            const auto d = static_cast<std::uint32_t>(r.pi1_value);
            const std::uint32_t m = z2 ? 2 : d;
            const std::string order = "finite fundamental group of order " + std::to_string(d);
            return {top_class_node(b, Rule::R5, 3, z2 ? kRefR5Even : kRefR5, space, m, r.triangulable), m,
                    z2 ? "top class of H^3(" + space + ";Z/2), " + order + " is even"
                       : "every nonzero class of H^3(" + space + ";" + zmod(d) + "), " + order};
        }
        default:
            break;
    }
    if (r.aspherical) {
        return {top_class_node(b, Rule::R4, 3, kRefR4, space, 2, r.triangulable), 2,
                "top class of H^3(" + space + ";Z/2), aspherical"};
    }
    auto node = cup_length_node(b, space, triangulate_expr({{s}}), 3);
    if (!node) throw Error(ErrorCode::InvalidArgument, space + ": expected Z/2 cup-length 3");
    return {*node, 2, "cup-length 3 over Z/2 on " + space + " (x u a u a)"};
}

// Route for a whole normalized expression; nullopt for the exceptional shape.
std::optional<Route> expression_route(Builder& b, const ManifoldExpr& e, const ExprFacts& f, bool z2_only = false) {
    if (f.exceptional_shape) return std::nullopt;
    if (e.summands.size() == 1) {
        if (z2_only && !has_z2_route(e.summands[0]) && record(e.summands[0]).pi1 == Pi1Tag::Finite) return std::nullopt;
        return prime_route(b, e.summands[0], z2_only);
    }
    const std::string space = e.to_string();
    if (f.pi1 == Pi1Tag::Free) {
        auto node = cup_length_node(b, space, triangulate_expr(e), 2);
        if (!node) throw Error(ErrorCode::InvalidArgument, space + ": expected Z/2 cup-length 2");
        return Route{*node, 2, "cup-length 2 over Z/2 on " + space};
    }
    for (const auto& s : e.summands) {
        const PrimeRecord r = record(s);
        if (r.pi1 == Pi1Tag::Trivial || r.pi1 == Pi1Tag::Free) continue;
        const bool z2 = !f.orientable || z2_only;
        if (z2 && !has_z2_route(s)) continue;
        Route inner = prime_route(b, s, z2);
        const std::string why = std::string(kRefR2) + "; f is the collapse " + space + " -> " + s.to_string() +
                                (f.orientable ? " of degree one" : " of degree one mod 2");
        CertNode node = top_class_node(b, Rule::R2, inner.node.bound, why, space, inner.coeffs, f.triangulable,
                                       {std::move(inner.node)});
        return Route{std::move(node), inner.coeffs,
                     "pullback along the collapse onto " + s.to_string() + " of: " + inner.description};
    }
    return std::nullopt;
}

CertNode upper_node(int value) {
    if (value == 1) return fact(Rule::SPHERE, 1, kRefSphere);
    if (value == 2) return fact(Rule::PUSHOUT, 2, kRefPushout);
    return fact(Rule::DIM, 3, kRefDim);
}

int value_of(const ExprFacts& f) {
    if (f.pi1 == Pi1Tag::Trivial) return 1;
    if (f.pi1 == Pi1Tag::Free) return 2;
    return 3;
}

std::string cover_note(const ManifoldExpr& cover) {
    return "the orientable double cover " + cover.to_string() + " has category 3";
}

Detection detect_from(const ManifoldExpr& e, const ExprFacts& f, const std::optional<Route>& main, Builder& b) {
    Detection d;
    if (!main) {
        d.status = DetectStatus::Unknown;
        d.reason = "exceptional shape: non-orientable with a prime summand carrying odd torsion; " +
                   cover_note(orientable_double_cover(e));
        return d;
    }
    d.status = DetectStatus::Detectable;
    d.routes.push_back({zmod(main->coeffs), main->description});
    if (f.orientable) {
        // Even order gives a second route over Z/2.
        if (auto second = expression_route(b, e, f, true);
            second && second->coeffs == 2 && second->description != main->description) {
            d.routes.push_back({"Z/2", second->description});
        }
    }
    return d;
}

}  // namespace

CatResult ls_category(const ManifoldExpr& input) {
    const ManifoldExpr e = normalize(input);
    const ExprFacts f = facts(e);
    const int value = value_of(f);
    Builder b;
    CatResult out;
    auto& c = out.cert;
    c.subject = e.to_string();
    c.lo = c.hi = value;
    c.value = value;
    c.upper = upper_node(value);

    std::optional<Route> route = expression_route(b, e, f);
    if (route) {
        c.lower = route->node;
    } else {
        const ManifoldExpr cover = orientable_double_cover(e);
        auto inner = expression_route(b, cover, facts(cover));
        if (!inner) throw Error(ErrorCode::InvalidArgument, "no route on the double cover " + cover.to_string());
        c.lower = fact(Rule::COVER, inner->node.bound, std::string(kRefCover) + "; cover " + cover.to_string(),
                       {std::move(inner->node)});
        c.notes.push_back(cover_note(cover));
    }
    out.detect = detect_from(e, f, route, b);
    c.notes.insert(c.notes.begin(), "pi1: " + f.pi1_text());
    c.notes.insert(c.notes.begin() + 1, std::string("orientable: ") + (f.orientable ? "yes" : "no"));
    c.premises = b.take();
    return out;
}

Detection detectability(const ManifoldExpr& e) { return ls_category(e).detect; }

CatResult ls_category(const DeltaComplex& complex, const std::string& space) {
    const ClosedCheckReport report = validate(complex);
    if (complex.dim() != 3 || !report.is_closed_pseudo_3_manifold || !report.connected) {
        throw Error(ErrorCode::NotClosed, "input is not a closed connected 3-complex");
    }
    const Pi1Class cls = classify(edge_path_presentation(complex));
    Builder b;
    CatResult out;
    auto& c = out.cert;
    c.subject = space;
    c.notes.push_back("pi1: " + cls.to_string() + " (" + cls.evidence + ")");
    c.notes.push_back(std::string("orientable: ") + (report.orientable ? "yes" : "no"));

    const CohomologyRing ring = ring_table(complex, 2);
    const int cl = cup_length(ring).length;
    int lo = std::max(1, cl), hi = 3;
    switch (cls.tag) {
        case Pi1Tag::Trivial: lo = hi = 1; break;
        case Pi1Tag::Free: lo = hi = 2; break;
        case Pi1Tag::Finite:
        case Pi1Tag::InfiniteNonFree: lo = hi = 3; break;
        case Pi1Tag::Unknown: break;
    }
    c.lo = lo;
    c.hi = hi;
    if (lo == hi) c.value = lo;
    c.upper = upper_node(hi);

    std::optional<CertNode> lower;
    if (cls.tag == Pi1Tag::Finite && report.orientable) {
        const auto d = static_cast<std::uint32_t>(cls.value);
        lower = verified(Rule::R5, 3, kRefR5, b.add({"", PremiseKind::TopClass, space, d, {}, 0}));
        out.detect = {DetectStatus::Detectable, {{zmod(d), "top class of H^3(M;" + zmod(d) + ")"}}, {}};
    } else if (cl >= lo) {
        lower = cup_length_node(b, space, complex, lo);
        out.detect = {DetectStatus::Detectable, {{"Z/2", "cup-length " + std::to_string(lo) + " over Z/2"}}, {}};
    } else {
        lower = fact(Rule::THEOREM, lo,
                     "a closed 3-manifold whose fundamental group is neither trivial nor free has category 3");
        out.detect = {DetectStatus::Unknown, {}, "raw triangulation: no detecting class found (Z/2 cup-length " +
                                                   std::to_string(cl) + ")"};
    }
    if (lo < hi) {
        out.detect = {DetectStatus::NotApplicable, {}, "fundamental group not classified; category only bounded"};
        c.notes.push_back("fundamental group not classified: reporting bounds [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    }
    c.lower = std::move(*lower);
    c.premises = b.take();
    return out;
}

CatResult verify_ganea(const ManifoldExpr& input, int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "sphere dimension must be at least 1");
    const ManifoldExpr e = normalize(input);
    const ExprFacts f = facts(e);
    const CatResult base = ls_category(e);
    const int value = *base.cert.value + 1;
    Builder b;
    CatResult out;
    out.detect = base.detect;
    auto& c = out.cert;
    c.subject = e.to_string() + " x S" + std::to_string(n);
    c.lo = c.hi = value;
    c.value = value;
    c.upper = fact(Rule::PRODUCT, value, kRefProduct, {base.cert.upper, fact(Rule::SPHERE, 1, kRefSphereN)});

    auto product_node = [&](const ManifoldExpr& m, const ExprFacts& mf, Route route) {
        const std::string space = m.to_string();
        CertNode sphere = fact(Rule::R1, 1, kRefSphereClass);
        const int bound = route.node.bound + 1;
        std::vector<CertNode> kids{std::move(route.node), std::move(sphere)};
        if (!mf.triangulable) return fact(Rule::R3, bound, kRefR3, std::move(kids));
        Premise p;
        p.coeffs = route.coeffs;
        if (n == 1) {
            p.kind = PremiseKind::CrossProduct;
            p.space = space + " x S1";
        } else {
            p.kind = PremiseKind::TensorProduct;
            p.space = space + " (x) S" + std::to_string(n);
        }
        return verified(Rule::R3, bound, kRefR3, b.add(p), std::move(kids));
    };

    if (auto route = expression_route(b, e, f)) {
        c.lower = product_node(e, f, std::move(*route));
    } else {
        const ManifoldExpr cover = orientable_double_cover(e);
        const ExprFacts cf = facts(cover);
        auto inner = expression_route(b, cover, cf);
        if (!inner) throw Error(ErrorCode::InvalidArgument, "no route on the double cover " + cover.to_string());
        CertNode node = product_node(cover, cf, std::move(*inner));
        const int bound = node.bound;
        c.lower = fact(Rule::COVER, bound,
                       std::string(kRefCover) + "; " + cover.to_string() + " x S^" + std::to_string(n) + " double covers",
                       {std::move(node)});
        c.notes.push_back(cover_note(cover));
    }
    c.notes.insert(c.notes.begin(), "cat(" + e.to_string() + ") = " + std::to_string(*base.cert.value));
    if (n == 1 && f.triangulable) {
        const std::string space = e.to_string() + " x S1";
        const int cl = cup_length(ring_table(product(triangulate_expr(e), gen::circle()), 2)).length;
        const std::string id = b.add({"", PremiseKind::CupLength, space, 2, {}, cl});
        c.notes.push_back("cl_Z/2(" + space + ") = " + std::to_string(cl) + " on the triangulated product (" + id + ")");
    } else if (f.triangulable && n >= 2) {
        const std::string space = e.to_string() + " (x) S" + std::to_string(n);
        const int cl = cup_length(kunneth_tensor(ring_table(triangulate_expr(e), 2), sphere_ring(n, 2))).length;
        const std::string id = b.add({"", PremiseKind::CupLength, space, 2, {}, cl});
        c.notes.push_back("cl_Z/2(" + space + ") = " + std::to_string(cl) + " in the tensor ring (" + id + ")");
    }
    c.premises = b.take();
    return out;
}

DegreeOneResult degree_one_consequences(const ManifoldExpr& source, const ManifoldExpr& target) {
    const ManifoldExpr s = normalize(source), t = normalize(target);
    const ExprFacts fs = facts(s), ft = facts(t);
    if (!fs.orientable || !ft.orientable) {
        throw Error(ErrorCode::NonOrientable, "degree-one consequences need oriented source and target");
    }
    DegreeOneResult r;
    r.cat_source = value_of(fs);
    r.cat_target = value_of(ft);
    auto free_like = [](const ExprFacts& f) { return f.pi1 == Pi1Tag::Trivial || f.pi1 == Pi1Tag::Free; };
    const std::string cmp = std::to_string(r.cat_source) + (r.cat_source >= r.cat_target ? " >= " : " < ") +
                            std::to_string(r.cat_target);
    if (r.cat_source >= r.cat_target) {
        r.verdict = DegreeOneVerdict::Consistent;
        r.explanation = "cat(source) " + cmp + " cat(target): no obstruction to a degree-one map";
        return r;
    }
    r.verdict = DegreeOneVerdict::NoDegreeOneMap;
    r.explanation = "cat(source) " + cmp + " cat(target): a degree-one map M -> N forces cat M >= cat N";
    if (free_like(fs) && !free_like(ft)) {
        r.explanation += "; also, a degree-one map from a manifold with free fundamental group forces the target's "
                         "fundamental group to be free";
    }
    return r;
}

std::string format_detection(const Detection& d) {
    std::ostringstream out;
    switch (d.status) {
        case DetectStatus::Detectable:
            out << "detectable\n";
            for (const auto& r : d.routes) out << "  over " << r.coefficients << ": " << r.description << '\n';
            break;
        case DetectStatus::Unknown:
            out << "unknown\n  " << d.reason << '\n';
            break;
        case DetectStatus::NotApplicable:
            out << "not applicable\n  " << d.reason << '\n';
            break;
    }
    return out.str();
}

std::string format_summary(const Certificate& cert, const std::string& quantity) {
    std::ostringstream out;
    if (cert.value) {
        out << quantity << " = " << *cert.value << '\n';
    } else {
        out << quantity << " in [" << cert.lo << ", " << cert.hi << "]\n";
    }
    out << "  upper: " << rule_name(cert.upper.rule) << " bound=" << cert.upper.bound << ": " << cert.upper.ref << '\n';
    out << "  lower: " << rule_name(cert.lower.rule) << " bound=" << cert.lower.bound << ": " << cert.lower.ref << '\n';
    return out.str();
}

}  // namespace lscat
