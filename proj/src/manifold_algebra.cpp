#include "lscat/manifold_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "lscat/error.hpp"

namespace lscat {

namespace {

HomologyGroup cyclic(Index rank, std::vector<long> torsion) {
    HomologyGroup g;
    g.rank = rank;
    for (long t : torsion) g.torsion.emplace_back(t);
    return g;
}

bool odd_part_nontrivial(std::uint64_t n) {
    while (n % 2 == 0 && n > 0) n /= 2;
    return n > 1;
}

const char* tag_name(Pi1Tag t) {
    switch (t) {
        case Pi1Tag::Trivial: return "trivial";
        case Pi1Tag::Free: return "free";
        case Pi1Tag::Finite: return "finite";
        case Pi1Tag::InfiniteNonFree: return "infinite-nonfree";
        case Pi1Tag::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace

std::string Summand::to_string() const {
    switch (kind) {
        case PrimeKind::S3: return "S3";
        case PrimeKind::S1xS2: return "S1xS2";
        case PrimeKind::S1TwistedS2: return "S1~S2";
        case PrimeKind::T3: return "T3";
        case PrimeKind::RP2xS1: return "RP2xS1";
        case PrimeKind::Q8: return "Q8";
        case PrimeKind::Poinc: return "Poinc";
        case PrimeKind::Lens:
            if (p == 2 && q == 1) return "RP3";
            return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return "?";
}

const std::vector<PrimeRecord>& catalog() {
    static const std::vector<PrimeRecord> records = [] {
        std::vector<PrimeRecord> r;
        // key, pi1, value, orientable, irreducible, aspherical, pi2_zero, odd torsion, triangulable
        r.push_back({"S3", Pi1Tag::Trivial, 0, true, true, false, true, false, true, cyclic(0, {})});
        r.push_back({"S1xS2", Pi1Tag::Free, 1, true, false, false, false, false, true, cyclic(1, {})});
        r.push_back({"S1~S2", Pi1Tag::Free, 1, false, false, false, false, false, true, cyclic(1, {})});
        r.push_back({"L(p,q)", Pi1Tag::Finite, 0, true, true, false, true, false, true, cyclic(0, {})});
        r.push_back({"T3", Pi1Tag::InfiniteNonFree, 0, true, true, true, true, false, true, cyclic(3, {})});
        r.push_back({"RP2xS1", Pi1Tag::InfiniteNonFree, 0, false, true, false, false, false, true, cyclic(1, {2})});
        r.push_back({"Q8", Pi1Tag::Finite, 8, true, true, false, true, false, false, cyclic(0, {2, 2})});
        r.push_back({"Poinc", Pi1Tag::Finite, 120, true, true, false, true, true, false, cyclic(0, {})});
        return r;
    }();
    return records;
}

PrimeRecord record(const Summand& s) {
    if (s.kind == PrimeKind::Lens) {
        PrimeRecord r = catalog()[3];
        r.key = s.to_string();
        r.pi1_value = static_cast<std::uint64_t>(s.p);
        r.has_odd_torsion = odd_part_nontrivial(r.pi1_value);
        r.h1 = cyclic(0, {s.p});
        return r;
    }
    return catalog()[static_cast<std::size_t>(s.kind)];
}

std::string catalog_self_test(const std::vector<PrimeRecord>& records) {
    for (const auto& r : records) {
        if (r.pi1 == Pi1Tag::Free && r.pi1_value > 0 && r.irreducible) {
            return r.key + ": nontrivial free fundamental group but irreducible";
        }
        if (r.pi1 == Pi1Tag::Finite && (!r.orientable || !r.pi2_zero)) {
            return r.key + ": finite fundamental group needs orientable with pi2 = 0";
        }
        const bool bundle = r.key == "S1xS2" || r.key == "S1~S2";
        if (r.irreducible == bundle) {
            return r.key + ": only the two S2-bundles over S1 are prime but reducible";
        }
        if (r.aspherical && r.pi1 != Pi1Tag::InfiniteNonFree) {
            return r.key + ": aspherical closed 3-manifolds have infinite non-free fundamental group";
        }
    }
    return {};
}

std::string dump_catalog() {
    std::ostringstream out;
    out << "key pi1 value orientable irreducible aspherical pi2_zero odd_torsion triangulable\n";
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    for (const auto& r : catalog()) {
        const bool lens = r.key == "L(p,q)";
        out << r.key << ' ' << tag_name(r.pi1) << ' ' << (lens ? std::string("p") : std::to_string(r.pi1_value)) << ' '
            << yn(r.orientable) << ' ' << yn(r.irreducible) << ' ' << yn(r.aspherical) << ' ' << yn(r.pi2_zero) << ' '
            << (lens ? "odd(p)" : yn(r.has_odd_torsion)) << ' ' << yn(r.triangulable) << '\n';
    }
    return out.str();
}

std::vector<PrimeRecord> load_catalog(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<PrimeRecord> out;
    std::size_t offset = 0;
    bool header = true;
    while (std::getline(in, line)) {
        const std::size_t at = offset;
        offset += line.size() + 1;
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream fields(line);
        std::string key, tag, value, o, irr, asph, pi2, odd, tri;
        if (!(fields >> key >> tag >> value >> o >> irr >> asph >> pi2 >> odd >> tri)) {
            throw ParseError(at, "catalog row needs 9 fields");
        }
        auto flag = [&](const std::string& f) {
            if (f == "yes") return true;
            if (f == "no") return false;
            throw ParseError(at, "expected yes/no, got '" + f + "'");
        };
        PrimeRecord r;
        r.key = key;
        const Pi1Tag tags[] = {Pi1Tag::Trivial, Pi1Tag::Free, Pi1Tag::Finite, Pi1Tag::InfiniteNonFree, Pi1Tag::Unknown};
        bool found = false;
        for (Pi1Tag t : tags) {
            if (tag == tag_name(t)) {
                r.pi1 = t;
                found = true;
            }
        }
        if (!found) throw ParseError(at, "unknown pi1 tag '" + tag + "'");
        r.pi1_value = value == "p" ? 0 : std::stoull(value);
        r.orientable = flag(o);
        r.irreducible = flag(irr);
        r.aspherical = flag(asph);
        r.pi2_zero = flag(pi2);
        r.has_odd_torsion = odd == "odd(p)" ? false : flag(odd);
        r.triangulable = flag(tri);
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ManifoldExpr parse() {
        ManifoldExpr e;
        e.summands.push_back(term());
        for (;;) {
            skip();
            if (pos_ == text_.size()) break;
            if (text_[pos_] != '#') fail("expected '#' or end of expression");
            ++pos_;
            e.summands.push_back(term());
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(pos_, what + "; grammar: term { # term }, term = S3 | S1xS2 | S1~S2 | T3 | RP2xS1 | RP3 | L(p,q) | Poinc | Q8");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool take(std::string_view word) {
        if (text_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }

    void expect(char c) {
        skip();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int integer() {
        skip();
        const std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) neg = text_[pos_++] == '-';
        long v = 0;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_++] - '0');
            if (v > 1000000) {
                pos_ = start;
                fail("integer too large");
            }
        }
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        return static_cast<int>(neg ? -v : v);
    }

    Summand term() {
        skip();
        // Longest names first so that S1xS2 is not read as a prefix of something else.
        if (take("S1xS2")) return {PrimeKind::S1xS2};
        if (take("S1~S2")) return {PrimeKind::S1TwistedS2};
        if (take("S3")) return {PrimeKind::S3};
        if (take("T3")) return {PrimeKind::T3};
        if (take("RP2xS1")) return {PrimeKind::RP2xS1};
        if (take("RP3")) return {PrimeKind::Lens, 2, 1};
        if (take("Poinc")) return {PrimeKind::Poinc};
        if (take("Q8")) return {PrimeKind::Q8};
        const std::size_t start = pos_;
        if (take("L")) {
            expect('(');
            const int p = integer();
            expect(',');
            const int q = integer();
            expect(')');
            if (p < 2 || std::gcd(p, q) != 1) {
                throw Error(ErrorCode::BadLensParams, "L(" + std::to_string(p) + "," + std::to_string(q) +
                                                          ") at byte " + std::to_string(start) +
                                                          " needs p >= 2 and gcd(p,q) = 1");
            }
            return {PrimeKind::Lens, p, q};
        }
        fail("unknown prime");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ManifoldExpr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

ManifoldExpr normalize(ManifoldExpr e) {
    for (auto& s : e.summands) {
        if (s.kind == PrimeKind::Lens) s.q = ((s.q % s.p) + s.p) % s.p;
    }
    std::erase_if(e.summands, [](const Summand& s) { return s.kind == PrimeKind::S3; });
    if (e.summands.empty()) e.summands.push_back({PrimeKind::S3});
    std::sort(e.summands.begin(), e.summands.end());
    return e;
}

std::string ManifoldExpr::to_string() const {
    std::string out;
    for (const auto& s : summands) {
        if (!out.empty()) out += " # ";
        out += s.to_string();
    }
    return out;
}

std::string ExprFacts::pi1_text() const {
    switch (pi1) {
        case Pi1Tag::Trivial: return "trivial";
        case Pi1Tag::Free: return "free of rank " + std::to_string(pi1_value);
        case Pi1Tag::Finite: return "finite of order " + std::to_string(pi1_value);
        case Pi1Tag::InfiniteNonFree: return "infinite, not free";
        case Pi1Tag::Unknown: return "unknown";
    }
    return "unknown";
}

ExprFacts facts(const ManifoldExpr& e) {
    ExprFacts f;
    bool all_trivial = true, all_free = true;
    std::uint64_t rank = 0;
    std::vector<mpz_class> torsion;
    for (const auto& s : e.summands) {
        const PrimeRecord r = record(s);
        all_trivial = all_trivial && r.pi1 == Pi1Tag::Trivial;
        all_free = all_free && (r.pi1 == Pi1Tag::Trivial || r.pi1 == Pi1Tag::Free);
        if (r.pi1 == Pi1Tag::Free) rank += r.pi1_value;
        f.orientable = f.orientable && r.orientable;
        f.has_odd_torsion = f.has_odd_torsion || r.has_odd_torsion;
        f.triangulable = f.triangulable && r.triangulable;
        f.h1.rank += r.h1.rank;
        torsion.insert(torsion.end(), r.h1.torsion.begin(), r.h1.torsion.end());
    }
    if (all_trivial) {
        f.pi1 = Pi1Tag::Trivial;
    } else if (all_free) {
        f.pi1 = Pi1Tag::Free;
        f.pi1_value = rank;
    } else if (e.summands.size() == 1 && record(e.summands[0]).pi1 == Pi1Tag::Finite) {
        f.pi1 = Pi1Tag::Finite;
        f.pi1_value = record(e.summands[0]).pi1_value;
    } else {
        f.pi1 = Pi1Tag::InfiniteNonFree;
    }
    f.exceptional_shape = !f.orientable && std::any_of(e.summands.begin(), e.summands.end(), [](const Summand& s) {
        return record(s).has_odd_torsion;
    });
    // Direct sum of cyclic groups, rewritten as invariant factors.
    IntMatrix diag(torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) diag(i, i) = torsion[i];
    for (auto& d : invariant_factors(diag)) {
        if (d > 1) f.h1.torsion.push_back(d);
    }
    return f;
}

DeltaComplex triangulate_expr(const ManifoldExpr& e) {
    for (const auto& s : e.summands) {
        if (!record(s).triangulable) {
            throw Error(ErrorCode::NoTriangulation, s.to_string() + " has no built-in triangulation");
        }
    }
    auto complex_of = [](const Summand& s) {
        switch (s.kind) {
            case PrimeKind::S3: return gen::s3();
            case PrimeKind::S1xS2: return gen::s1xs2();
            case PrimeKind::S1TwistedS2: return gen::s1_twisted_s2();
            case PrimeKind::T3: return gen::torus3();
            case PrimeKind::RP2xS1: return gen::rp2xs1();
            case PrimeKind::Lens: return gen::lens(s.p, ((s.q % s.p) + s.p) % s.p);
            default: throw Error(ErrorCode::NoTriangulation, s.to_string() + " has no built-in triangulation");
        }
    };
    DeltaComplex out = complex_of(e.summands.at(0));
    for (std::size_t i = 1; i < e.summands.size(); ++i) out = connected_sum(out, complex_of(e.summands[i]));
    return out;
}

Summand mirror(const Summand& s) {
    if (s.kind != PrimeKind::Lens) return s;
    return {PrimeKind::Lens, s.p, s.p - s.q};
}

ManifoldExpr orientable_double_cover(const ManifoldExpr& e) {
    ManifoldExpr out;
    std::vector<Summand> orientable;
    int nonorientable = 0;
    for (const auto& s : e.summands) {
        if (record(s).orientable) {
            if (s.kind != PrimeKind::S3) orientable.push_back(s);
        } else {
            // Both non-orientable catalog primes are doubly covered by S1xS2.
            ++nonorientable;
            out.summands.push_back({PrimeKind::S1xS2});
        }
    }
    if (nonorientable == 0) throw Error(ErrorCode::InvalidArgument, e.to_string() + " is orientable");
    for (const auto& s : orientable) {
        out.summands.push_back(s);
        out.summands.push_back(mirror(s));
    }
    for (int i = 1; i < nonorientable; ++i) out.summands.push_back({PrimeKind::S1xS2});
    return normalize(out);
}

}  // namespace lscat
