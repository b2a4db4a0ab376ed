#include "lscat/delta_complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "lscat/error.hpp"
#include "lscat/exact_algebra.hpp"

namespace lscat {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedComplex: return "MalformedComplex";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::UnknownGenerator: return "UnknownGenerator";
        case ErrorCode::BadLensParams: return "BadLensParams";
        case ErrorCode::NoTriangulation: return "NoTriangulation";
        case ErrorCode::DimensionOverflow: return "DimensionOverflow";
        case ErrorCode::DegreeOverflow: return "DegreeOverflow";
        case ErrorCode::ModulusMismatch: return "ModulusMismatch";
        case ErrorCode::CompositeModulus: return "CompositeModulus";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NonOrientable: return "NonOrientable";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

DeltaComplex::DeltaComplex(Index vertex_count, std::vector<std::vector<std::vector<Index>>> faces)
    : vertex_count_(vertex_count) {
    if (vertex_count_ == 0) {
        throw Error(ErrorCode::MalformedComplex, "complex has no vertices");
    }
    faces_.resize(faces.size());
    Index below = vertex_count_;
    for (std::size_t d = 0; d < faces.size(); ++d) {
        const int k = static_cast<int>(d) + 1;
        if (faces[d].empty()) {
            throw Error(ErrorCode::MalformedComplex,
                        "dimension " + std::to_string(k) + " has no simplices");
        }
        auto& flat = faces_[d];
        flat.reserve(faces[d].size() * (k + 1));
        for (std::size_t s = 0; s < faces[d].size(); ++s) {
            const auto& f = faces[d][s];
            if (f.size() != static_cast<std::size_t>(k + 1)) {
                throw Error(ErrorCode::MalformedComplex,
                            std::to_string(k) + "-simplex " + std::to_string(s) + " has " +
                                std::to_string(f.size()) + " faces");
            }
            for (Index x : f) {
                if (x >= below) {
                    throw Error(ErrorCode::MalformedComplex,
                                std::to_string(k) + "-simplex " + std::to_string(s) +
                                    " references missing face " + std::to_string(x));
                }
                flat.push_back(x);
            }
        }
        below = faces[d].size();
    }
    if (auto violation = find_identity_violation()) {
        throw Error(ErrorCode::MalformedComplex, *violation);
    }
}

Index DeltaComplex::count(int k) const {
    if (k < 0 || k > dim()) return 0;
    if (k == 0) return vertex_count_;
    return faces_[k - 1].size() / static_cast<std::size_t>(k + 1);
}

Index DeltaComplex::total_count() const {
    Index total = 0;
    for (int k = 0; k <= dim(); ++k) total += count(k);
    return total;
}

Index DeltaComplex::vertex(int k, Index s, int j) const {
    while (k > 0) {
        if (j < k) {
            s = face(k, s, k);
        } else {
            s = face(k, s, 0);
            --j;
        }
        --k;
    }
    return s;
}

std::vector<Index> DeltaComplex::vertices(int k, Index s) const {
    std::vector<Index> out(static_cast<std::size_t>(k + 1));
    for (int j = 0; j <= k; ++j) out[j] = vertex(k, s, j);
    return out;
}

Index DeltaComplex::front_face(int k, Index s, int r) const {
    for (int d = k; d > r; --d) s = face(d, s, d);
    return s;
}

Index DeltaComplex::back_face(int k, Index s, int r) const {
    for (int d = k; d > k - r; --d) s = face(d, s, 0);
    return s;
}

int DeltaComplex::euler_characteristic() const {
    long chi = 0;
    for (int k = 0; k <= dim(); ++k) {
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(count(k));
    }
    return static_cast<int>(chi);
}

std::optional<std::string> DeltaComplex::find_identity_violation() const {
    for (int k = 2; k <= dim(); ++k) {
        for (Index s = 0; s < count(k); ++s) {
            for (int j = 1; j <= k; ++j) {
                for (int i = 0; i < j; ++i) {
                    Index lhs = face(k - 1, face(k, s, j), i);
                    Index rhs = face(k - 1, face(k, s, i), j - 1);
                    if (lhs != rhs) {
                        std::ostringstream msg;
                        msg << "simplicial identity fails on " << k << "-simplex " << s
                            << ": face_" << i << "(face_" << j << ") = " << lhs << " but face_"
                            << j - 1 << "(face_" << i << ") = " << rhs;
                        return msg.str();
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<std::vector<Index>>> unflatten(const DeltaComplex& c) {
    std::vector<std::vector<std::vector<Index>>> out(static_cast<std::size_t>(c.dim()));
    for (int k = 1; k <= c.dim(); ++k) {
        auto& level = out[k - 1];
        level.reserve(c.count(k));
        for (Index s = 0; s < c.count(k); ++s) {
            auto f = c.faces(k, s);
            level.emplace_back(f.begin(), f.end());
        }
    }
    return out;
}

// Incidences of codimension-one simplices in top simplices: (top, face slot).
std::vector<std::vector<std::pair<Index, int>>> top_incidences(const DeltaComplex& c) {
    const int n = c.dim();
    std::vector<std::vector<std::pair<Index, int>>> inc(c.count(n - 1));
    for (Index s = 0; s < c.count(n); ++s) {
        for (int i = 0; i <= n; ++i) inc[c.face(n, s, i)].emplace_back(s, i);
    }
    return inc;
}

}  // namespace

DeltaComplex from_vertex_tuples(Index vertex_count, const std::vector<std::vector<Index>>& tops) {
    if (tops.empty()) throw Error(ErrorCode::MalformedComplex, "no top simplices");
    const int n = static_cast<int>(tops.front().size()) - 1;
    std::vector<std::map<std::vector<Index>, Index>> lookup(static_cast<std::size_t>(n + 1));
    std::vector<std::vector<std::vector<Index>>> faces(static_cast<std::size_t>(n));

    auto insert = [&](auto&& self, const std::vector<Index>& tuple) -> Index {
        const int k = static_cast<int>(tuple.size()) - 1;
        if (k == 0) {
            if (tuple[0] >= vertex_count) {
                throw Error(ErrorCode::MalformedComplex, "vertex label out of range");
            }
            return tuple[0];
        }
        auto it = lookup[k].find(tuple);
        if (it != lookup[k].end()) return it->second;
        std::vector<Index> f(static_cast<std::size_t>(k + 1));
        for (int i = 0; i <= k; ++i) {
            std::vector<Index> sub;
            sub.reserve(tuple.size() - 1);
            for (int j = 0; j <= k; ++j) {
                if (j != i) sub.push_back(tuple[j]);
            }
            f[i] = self(self, sub);
        }
        Index id = faces[k - 1].size();
        faces[k - 1].push_back(std::move(f));
        lookup[k].emplace(tuple, id);
        return id;
    };
    for (const auto& t : tops) {
        if (static_cast<int>(t.size()) != n + 1) {
            throw Error(ErrorCode::MalformedComplex, "top simplices of mixed dimension");
        }
        insert(insert, t);
    }
    return DeltaComplex(vertex_count, std::move(faces));
}

DeltaComplex quotient(const DeltaComplex& complex, const std::vector<Identification>& glue) {
    const int n = complex.dim();
    std::vector<std::vector<Index>> parent(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        parent[k].resize(complex.count(k));
        std::iota(parent[k].begin(), parent[k].end(), Index{0});
    }
    auto find = [&](int k, Index x) {
        while (parent[k][x] != x) {
            parent[k][x] = parent[k][parent[k][x]];
            x = parent[k][x];
        }
        return x;
    };
    std::deque<Identification> queue(glue.begin(), glue.end());
    while (!queue.empty()) {
        auto [k, a, b] = queue.front();
        queue.pop_front();
        if (k < 0 || k > n || a >= complex.count(k) || b >= complex.count(k)) {
            throw Error(ErrorCode::MalformedComplex, "identification out of range");
        }
        Index ra = find(k, a);
        Index rb = find(k, b);
        if (ra == rb) continue;
        parent[k][std::max(ra, rb)] = std::min(ra, rb);
        if (k > 0) {
            for (int i = 0; i <= k; ++i) {
                queue.push_back({k - 1, complex.face(k, a, i), complex.face(k, b, i)});
            }
        }
    }
    std::vector<std::vector<Index>> renumber(static_cast<std::size_t>(n + 1));
    std::vector<Index> sizes(static_cast<std::size_t>(n + 1), 0);
    for (int k = 0; k <= n; ++k) {
        renumber[k].assign(complex.count(k), Index(-1));
        for (Index s = 0; s < complex.count(k); ++s) {
            Index r = find(k, s);
            if (renumber[k][r] == Index(-1)) renumber[k][r] = sizes[k]++;
            renumber[k][s] = renumber[k][r];
        }
    }
    std::vector<std::vector<std::vector<Index>>> faces(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        faces[k - 1].assign(sizes[k], {});
        for (Index s = 0; s < complex.count(k); ++s) {
            auto& f = faces[k - 1][renumber[k][s]];
            if (!f.empty()) continue;
            for (int i = 0; i <= k; ++i) f.push_back(renumber[k - 1][complex.face(k, s, i)]);
        }
    }
    return DeltaComplex(sizes[0], std::move(faces));
}

DeltaComplex disjoint_union(const DeltaComplex& a, const DeltaComplex& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::InvalidArgument, "disjoint union of complexes of different dimension");
    }
    auto faces = unflatten(a);
    for (int k = 1; k <= b.dim(); ++k) {
        const Index offset = a.count(k - 1);
        for (Index s = 0; s < b.count(k); ++s) {
            std::vector<Index> f;
            for (Index x : b.faces(k, s)) f.push_back(x + offset);
            faces[k - 1].push_back(std::move(f));
        }
    }
    return DeltaComplex(a.count(0) + b.count(0), std::move(faces));
}

DeltaComplex remove_top_simplices(const DeltaComplex& complex, std::vector<Index> removed) {
    const int n = complex.dim();
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot remove vertices");
    std::sort(removed.begin(), removed.end());
    auto faces = unflatten(complex);
    std::vector<std::vector<Index>> kept;
    for (Index s = 0; s < faces[n - 1].size(); ++s) {
        if (!std::binary_search(removed.begin(), removed.end(), s)) {
            kept.push_back(std::move(faces[n - 1][s]));
        }
    }
    faces[n - 1] = std::move(kept);
    return DeltaComplex(complex.count(0), std::move(faces));
}

std::optional<std::vector<int>> orientation_signs(const DeltaComplex& complex) {
    const int n = complex.dim();
    if (n == 0) {
        if (complex.count(0) != 1) return std::nullopt;
        return std::vector<int>{1};
    }
    auto inc = top_incidences(complex);
    for (const auto& e : inc) {
        if (e.size() != 2) return std::nullopt;
    }
    // Adjacency via shared codimension-one faces.
    std::vector<std::vector<Index>> by_top(complex.count(n));
    for (Index f = 0; f < inc.size(); ++f) {
        by_top[inc[f][0].first].push_back(f);
        if (inc[f][1].first != inc[f][0].first) by_top[inc[f][1].first].push_back(f);
    }
    std::vector<int> sign(complex.count(n), 0);
    std::deque<Index> queue{0};
    sign[0] = 1;
    while (!queue.empty()) {
        Index s = queue.front();
        queue.pop_front();
        for (Index f : by_top[s]) {
            auto [s0, i0] = inc[f][0];
            auto [s1, i1] = inc[f][1];
            if (s0 == s1) {
                if ((i0 + i1) % 2 == 0) return std::nullopt;
                continue;
            }
            Index other = s0 == s ? s1 : s0;
            int want = -sign[s] * (((i0 + i1) % 2 == 0) ? 1 : -1);
            if (sign[other] == 0) {
                sign[other] = want;
                queue.push_back(other);
            } else if (sign[other] != want) {
                return std::nullopt;
            }
        }
    }
    if (std::find(sign.begin(), sign.end(), 0) != sign.end()) return std::nullopt;
    return sign;
}

ClosedCheckReport validate(const DeltaComplex& complex) {
    if (auto violation = complex.find_identity_violation()) {
        throw Error(ErrorCode::MalformedComplex, *violation);
    }
    ClosedCheckReport report;
    const int n = complex.dim();
    report.dimension = n;
    report.euler_characteristic = complex.euler_characteristic();
    if (n >= 1) {
        auto inc = top_incidences(complex);
        for (Index f = 0; f < inc.size(); ++f) {
            if (inc[f].size() != 2) report.offending_faces.push_back(f);
        }
    }
    report.is_closed_pseudomanifold = report.offending_faces.empty();
    report.is_closed_pseudo_3_manifold = n == 3 && report.is_closed_pseudomanifold;

    report.connected = betti0(complex) == 1;
    if (report.is_closed_pseudomanifold && report.connected) {
        auto top = integral_homology_degree(complex, n);
        report.orientable = top.rank == 1 && top.torsion.empty();
    }
    return report;
}

}  // namespace lscat
