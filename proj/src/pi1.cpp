#include "lscat/pi1.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <cctype>
#include <set>

#include "lscat/error.hpp"

namespace lscat {

// ---------------------------------------------------------------------------
// Words

Word free_reduce(const Word& w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x) {
            out.pop_back();
        } else {
            out.push_back(x);
        }
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(r.begin() + lo, r.begin() + hi);
}

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

std::size_t total_length(const GroupPresentation& p) {
    std::size_t n = 0;
    for (const auto& r : p.relators) n += r.size();
    return n;
}

namespace {

std::string letter(int x, int gens) {
    const int g = std::abs(x) - 1;
    if (gens <= 26) return std::string(1, static_cast<char>((x > 0 ? 'a' : 'A') + g));
    return (x > 0 ? "x" : "X") + std::to_string(g);
}

}  // namespace

std::string GroupPresentation::to_string() const {
    std::string out = "<" + std::to_string(generators) + ";";
    for (std::size_t i = 0; i < relators.size(); ++i) {
        out += i ? ", " : " ";
        if (relators[i].empty()) out += "1";
        for (int x : relators[i]) out += letter(x, generators);
    }
    return out + ">";
}

GroupPresentation parse_presentation(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c) throw ParseError(i, std::string("expected '") + c + "'");
        ++i;
    };
    GroupPresentation p;
    expect('<');
    skip();
    const std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        p.generators = p.generators * 10 + (text[i] - '0');
        if (p.generators > 100000) throw ParseError(num_start, "too many generators");
        ++i;
    }
    if (i == num_start) throw ParseError(i, "expected generator count");
    expect(';');
    skip();
    if (i < text.size() && text[i] == '>') {
        ++i;
    } else {
        for (;;) {
            skip();
            Word w;
            const std::size_t word_start = i;
            while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) {
                const char c = text[i];
                const std::size_t at = i;
                int g = -1;
                bool inv = false;
                if (c == '1') {
                    ++i;
                    continue;
                }
                if (p.generators > 26 && (c == 'x' || c == 'X')) {
                    inv = c == 'X';
                    ++i;
                    const std::size_t ds = i;
                    g = 0;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                        g = g * 10 + (text[i] - '0');
                        ++i;
                        if (g > 100000) break;
                    }
                    if (i == ds) throw ParseError(at, "expected index after generator token");
                } else if (c >= 'a' && c <= 'z') {
                    g = c - 'a';
                    ++i;
                } else if (c >= 'A' && c <= 'Z') {
                    g = c - 'A';
                    inv = true;
                    ++i;
                } else {
                    throw ParseError(at, "unexpected character");
                }
                if (g >= p.generators) throw ParseError(at, "generator out of range");
                w.push_back(inv ? -(g + 1) : g + 1);
            }
            if (i == word_start) throw ParseError(i, "expected a relator word");
            p.relators.push_back(std::move(w));
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            expect('>');
            break;
        }
    }
    skip();
    if (i != text.size()) throw ParseError(i, "trailing characters after presentation");
    return p;
}

// ---------------------------------------------------------------------------
// Edge-path group

GroupPresentation edge_path_presentation(const DeltaComplex& complex) {
    const Index nv = complex.count(0);
    const Index ne = complex.dim() >= 1 ? complex.count(1) : 0;
    std::vector<std::vector<std::pair<Index, Index>>> adj(nv);  // (edge, other end)
    for (Index e = 0; e < ne; ++e) {
        const Index a = complex.face(1, e, 1), b = complex.face(1, e, 0);
        adj[a].emplace_back(e, b);
        adj[b].emplace_back(e, a);
    }
    std::vector<bool> seen(nv, false), tree(ne, false);
    std::deque<Index> queue{0};
    seen[0] = true;
    Index reached = 1;
    while (!queue.empty()) {
        const Index v = queue.front();
        queue.pop_front();
        for (auto [e, w] : adj[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            tree[e] = true;
            ++reached;
            queue.push_back(w);
        }
    }
    if (reached != nv) throw Error(ErrorCode::NotConnected, "complex is not connected");

    GroupPresentation p;
    std::vector<int> gen_of(ne, 0);
    for (Index e = 0; e < ne; ++e) {
        if (!tree[e]) gen_of[e] = ++p.generators;
    }
    if (complex.dim() < 2) return p;
    for (Index t = 0; t < complex.count(2); ++t) {
        Word w;
        for (auto [slot, sign] : {std::pair{2, 1}, std::pair{0, 1}, std::pair{1, -1}}) {
            const int g = gen_of[complex.face(2, t, slot)];
            if (g != 0) w.push_back(sign * g);
        }
        w = cyclic_reduce(w);
        if (!w.empty()) p.relators.push_back(std::move(w));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Tietze

namespace {

// Canonical representative of a relator up to rotation and inversion.
Word canonical(const Word& w) {
    Word best = w;
    for (const Word& base : {w, inverse(w)}) {
        Word r = base;
        for (std::size_t k = 0; k < r.size(); ++k) {
            std::rotate(r.begin(), r.begin() + 1, r.end());
            if (r < best) best = r;
        }
    }
    return best;
}

bool tidy(GroupPresentation& p) {
    std::set<Word> seen;
    std::vector<Word> out;
    for (const auto& r : p.relators) {
        Word c = canonical(cyclic_reduce(r));
        if (c.empty() || !seen.insert(c).second) continue;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    const bool changed = out != p.relators;
    p.relators = std::move(out);
    return changed;
}

std::size_t occurrences(const Word& w, int g) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [g](int x) { return std::abs(x) == g; }));
}

// Remove generator g (1-based), renumbering the ones above it.
void drop_generator(GroupPresentation& p, int g) {
    for (auto& r : p.relators) {
        for (int& x : r) {
            if (std::abs(x) > g) x += x > 0 ? -1 : 1;
        }
    }
    --p.generators;
}

// Eliminate a generator occurring once in some relator, if the total length
// does not grow.
bool eliminate(GroupPresentation& p) {
    struct Choice {
        long delta;
        std::size_t rel;
        int gen;
    };
    std::optional<Choice> best;
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        const Word& r = p.relators[ri];
        const long len = static_cast<long>(r.size());
        for (int g = 1; g <= p.generators; ++g) {
            if (occurrences(r, g) != 1) continue;
            long occ = 0;
            for (std::size_t j = 0; j < p.relators.size(); ++j) {
                if (j != ri) occ += static_cast<long>(occurrences(p.relators[j], g));
            }
            const long delta = -len + occ * (len - 2);
            if (delta > 0) continue;
            if (!best || delta < best->delta) best = Choice{delta, ri, g};
        }
    }
    if (!best) return false;
    // r = u g^e v  =>  g^e = u^-1 v^-1, so g = (v u)^-e.
    Word r = p.relators[best->rel];
    auto pos = std::find_if(r.begin(), r.end(), [&](int x) { return std::abs(x) == best->gen; });
    const int e = *pos > 0 ? 1 : -1;
    Word vu(pos + 1, r.end());
    vu.insert(vu.end(), r.begin(), pos);
    const Word value = e > 0 ? inverse(vu) : vu;
    const Word value_inv = inverse(value);
    p.relators.erase(p.relators.begin() + static_cast<long>(best->rel));
    for (auto& w : p.relators) {
        Word out;
        for (int x : w) {
            if (x == best->gen) {
                out.insert(out.end(), value.begin(), value.end());
            } else if (x == -best->gen) {
                out.insert(out.end(), value_inv.begin(), value_inv.end());
            } else {
                out.push_back(x);
            }
        }
        w = free_reduce(out);
    }
    drop_generator(p, best->gen);
    return true;
}

// If a cyclic subword u of relator r is longer than half of r, replace u in
// other relators (cyclically) by the shorter inverse complement.
bool half_substitute(GroupPresentation& p) {
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        const Word& r = p.relators[ri];
        const std::size_t n = r.size();
        if (n < 2) continue;
        for (const Word& base : {r, inverse(r)}) {
            for (std::size_t start = 0; start < n; ++start) {
                Word rot(base.begin() + static_cast<long>(start), base.end());
                rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(start));
                for (std::size_t len = n / 2 + 1; len <= n; ++len) {
                    const Word u(rot.begin(), rot.begin() + static_cast<long>(len));
                    // u . w = 1 with w the rest, so u = w^-1.
                    const Word repl = inverse(Word(rot.begin() + static_cast<long>(len), rot.end()));
                    for (std::size_t j = 0; j < p.relators.size(); ++j) {
                        if (j == ri) continue;
                        Word& target = p.relators[j];
                        const std::size_t m = target.size();
                        if (m < len) continue;
                        for (std::size_t s = 0; s < m; ++s) {
                            bool match = true;
                            for (std::size_t t = 0; t < len && match; ++t) match = target[(s + t) % m] == u[t];
                            if (!match) continue;
                            Word rotated;
                            for (std::size_t t = 0; t < m; ++t) rotated.push_back(target[(s + t) % m]);
                            Word out = repl;
                            out.insert(out.end(), rotated.begin() + static_cast<long>(len), rotated.end());
                            target = cyclic_reduce(out);
                            return true;
                        }
                    }
                }
            }
        }
    }
    return false;
}

}  // namespace

GroupPresentation tietze_simplify(GroupPresentation p, std::size_t budget) {
    tidy(p);
    for (std::size_t step = 0; step < budget; ++step) {
        if (eliminate(p)) {
            tidy(p);
            continue;
        }
        if (half_substitute(p)) {
            tidy(p);
            continue;
        }
        break;
    }
    return p;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter (HLT)

namespace {

class CosetTable {
public:
    CosetTable(int gens, Index limit) : cols_(2 * gens), limit_(limit) { add(); }

    static int col(int x) { return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1; }
    static int inv_col(int c) { return c ^ 1; }

    bool live(Index c) const { return forward_[c] == c; }
    Index size() const { return forward_.size(); }
    Index live_count() const { return live_; }
    bool overflow() const { return overflow_; }

    Index& entry(Index c, int x) { return table_[c * cols_ + col(x)]; }

    bool define(Index c, int x) {
        if (forward_.size() >= limit_) {
            overflow_ = true;
            return false;
        }
        const Index d = add();
        entry(c, x) = d;
        entry(d, -x) = c;
        return true;
    }

    // Scan c under relator w, defining cosets to close gaps. Returns false on overflow.
    bool scan_and_fill(Index c, const Word& w) {
        const std::size_t n = w.size();
        std::size_t i = 0, j = n;
        Index f = c, b = c;
        for (;;) {
            while (i < j && entry(f, w[i]) != kNone) f = entry(f, w[i++]);
            if (i == j) {
                if (f != b) coincidence(f, b);
                return true;
            }
            while (j > i && entry(b, -w[j - 1]) != kNone) b = entry(b, -w[--j]);
            if (j < i) {
                coincidence(f, b);
                return true;
            }
            if (i == j) {
                if (f != b) coincidence(f, b);
                return true;
            }
            if (j == i + 1) {
                entry(f, w[i]) = b;
                entry(b, -w[i]) = f;
                return true;
            }
            if (!define(f, w[i])) return false;
        }
    }

    void coincidence(Index a, Index b) {
        std::deque<Index> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
            const Index e = queue.front();
            queue.pop_front();
            for (int c = 0; c < cols_; ++c) {
                const Index f = table_[e * cols_ + c];
                if (f == kNone) continue;
                table_[f * cols_ + inv_col(c)] = kNone;
                const Index e1 = rep(e), f1 = rep(f);
                Index& slot = table_[e1 * cols_ + c];
                if (slot != kNone) {
                    merge(f1, slot, queue);
                } else {
                    Index& back = table_[f1 * cols_ + inv_col(c)];
                    if (back != kNone) {
                        merge(e1, back, queue);
                    } else {
                        slot = f1;
                        back = e1;
                    }
                }
            }
        }
    }

    Index next_live(Index c) const {
        ++c;
        while (c < forward_.size() && !live(c)) ++c;
        return c;
    }

    static constexpr Index kNone = static_cast<Index>(-1);

private:
    Index add() {
        const Index d = forward_.size();
        forward_.push_back(d);
        table_.resize(table_.size() + static_cast<std::size_t>(cols_), kNone);
        ++live_;
        return d;
    }

    Index rep(Index c) {
        Index r = c;
        while (forward_[r] != r) r = forward_[r];
        while (forward_[c] != r) {
            const Index next = forward_[c];
            forward_[c] = r;
            c = next;
        }
        return r;
    }

    void merge(Index a, Index b, std::deque<Index>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        forward_[b] = a;
        --live_;
        queue.push_back(b);
    }

    int cols_;
    Index limit_;
    bool overflow_ = false;
    Index live_ = 0;
    std::vector<Index> forward_;
    std::vector<Index> table_;
};

}  // namespace

CosetEnumeration todd_coxeter(const GroupPresentation& p, Index max_cosets) {
    CosetEnumeration out;
    if (max_cosets < 1) return out;
    CosetTable t(p.generators, max_cosets);
    std::vector<Word> rels;
    for (const auto& r : p.relators) {
        Word w = cyclic_reduce(r);
        if (!w.empty()) rels.push_back(std::move(w));
    }
    for (Index c = 0; c < t.size(); c = t.next_live(c)) {
        for (const auto& r : rels) {
            if (!t.live(c)) break;
            if (!t.scan_and_fill(c, r)) {
                out.defined = t.size();
                return out;
            }
        }
        if (!t.live(c)) continue;
        for (int g = 1; g <= p.generators; ++g) {
            for (int x : {g, -g}) {
                if (t.entry(c, x) == CosetTable::kNone && !t.define(c, x)) {
                    out.defined = t.size();
                    return out;
                }
            }
        }
    }
    out.complete = true;
    out.cosets = t.live_count();
    out.defined = t.size();
    return out;
}

// ---------------------------------------------------------------------------

HomologyGroup abelianization(const GroupPresentation& p) {
    IntMatrix m(p.relators.size(), static_cast<Index>(p.generators));
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        for (int x : p.relators[r]) m(r, std::abs(x) - 1) += x > 0 ? 1 : -1;
    }
    HomologyGroup g;
    auto factors = invariant_factors(m);
    g.rank = static_cast<Index>(p.generators) - factors.size();
    for (auto& f : factors) {
        if (f > 1) g.torsion.push_back(f);
    }
    return g;
}

std::uint64_t count_homs_to_s3(const GroupPresentation& p) {
    if (p.generators > 8) throw Error(ErrorCode::InvalidArgument, "too many generators for hom counting");
    // S3 as permutations of {0,1,2}.
    using Perm = std::array<int, 3>;
    std::vector<Perm> elems;
    Perm base{0, 1, 2};
    do {
        elems.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    const int n = 6;
    auto index_of = [&](const Perm& q) {
        return static_cast<int>(std::find(elems.begin(), elems.end(), q) - elems.begin());
    };
    std::array<std::array<int, 6>, 6> mul{};
    std::array<int, 6> inv{};
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Perm c{elems[a][elems[b][0]], elems[a][elems[b][1]], elems[a][elems[b][2]]};
            mul[a][b] = index_of(c);
            if (mul[a][b] == 0) inv[a] = b;
        }
    }
    std::vector<int> image(static_cast<std::size_t>(p.generators), 0);
    std::uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (const auto& r : p.relators) {
            int acc = 0;
            for (int x : r) {
                const int g = image[std::abs(x) - 1];
                acc = mul[acc][x > 0 ? g : inv[g]];
            }
            if (acc != 0) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        std::size_t k = 0;
        while (k < image.size() && ++image[k] == n) image[k++] = 0;
        if (k == image.size()) break;
    }
    return count;
}

std::string Pi1Class::to_string() const {
    switch (tag) {
        case Pi1Tag::Trivial: return "trivial";
        case Pi1Tag::Free: return "free(" + std::to_string(value) + ")";
        case Pi1Tag::Finite: return "finite(" + std::to_string(value) + ")";
        case Pi1Tag::InfiniteNonFree: return "infinite non-free";
        case Pi1Tag::Unknown: return "unknown";
    }
    return "unknown";
}

Pi1Class classify(const GroupPresentation& input, Index max_cosets) {
    const GroupPresentation p = tietze_simplify(input);
    const std::string simplified = "simplified to " + p.to_string();
    if (p.relators.empty()) {
        if (p.generators == 0) return {Pi1Tag::Trivial, 0, simplified};
        return {Pi1Tag::Free, static_cast<std::uint64_t>(p.generators), simplified + " (no relators)"};
    }
    const HomologyGroup ab = abelianization(p);
    const std::string ab_text = "abelianization " + format_group(ab, 0);
    auto enumerate = [&](const std::string& lead) -> std::optional<Pi1Class> {
        auto tc = todd_coxeter(p, max_cosets);
        if (!tc.complete) return std::nullopt;
        const std::string ev = simplified + "; " + lead + "coset table closed with " +
                               std::to_string(tc.cosets) + " cosets";
        if (tc.cosets == 1) return Pi1Class{Pi1Tag::Trivial, 0, ev};
        return Pi1Class{Pi1Tag::Finite, tc.cosets, ev};
    };

    if (!ab.torsion.empty()) {
        if (ab.rank >= 1) {
            return {Pi1Tag::InfiniteNonFree, 0,
                    simplified + "; " + ab_text + ": torsion rules out free, positive rank rules out finite"};
        }
        if (auto c = enumerate(ab_text + "; ")) return *c;
        return {Pi1Tag::Unknown, 0, simplified + "; " + ab_text + " has torsion, coset enumeration exceeded " +
                                        std::to_string(max_cosets)};
    }
    if (ab.rank == 0) {
        if (auto c = enumerate("")) return *c;
        return {Pi1Tag::Unknown, 0, simplified + "; perfect group, coset enumeration exceeded " +
                                        std::to_string(max_cosets)};
    }
    if (p.generators <= 8) {
        const std::uint64_t homs = count_homs_to_s3(p);
        std::uint64_t free_count = 1;
        for (Index i = 0; i < ab.rank; ++i) free_count *= 6;
        if (homs != free_count) {
            return {Pi1Tag::InfiniteNonFree, 0,
                    simplified + "; " + ab_text + "; |Hom(G,S3)| = " + std::to_string(homs) +
                        " but a free group of rank " + std::to_string(ab.rank) + " has " +
                        std::to_string(free_count)};
        }
    }
    return {Pi1Tag::Unknown, 0, simplified + "; " + ab_text + ", no freeness certificate"};
}

}  // namespace lscat
