#pragma once

// Reference computations that share no code with the library: boundary
// matrices are rebuilt from the raw face tables and reduced with plain
// 128-bit integer arithmetic or bit-packed GF(2) elimination.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lscat/delta_complex.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<__int128>>;

inline Matrix boundary(const lscat::DeltaComplex& c, int k) {
    const std::size_t rows = c.count(k - 1), cols = c.count(k);
    Matrix m(rows, std::vector<__int128>(cols, 0));
    for (std::size_t s = 0; s < cols; ++s) {
        for (int i = 0; i <= k; ++i) m[c.face(k, s, i)][s] += (i % 2 == 0) ? 1 : -1;
    }
    return m;
}

inline __int128 abs128(__int128 x) { return x < 0 ? -x : x; }

/// Nonzero diagonal of a Smith form, as a sorted divisibility chain.
inline std::vector<std::int64_t> invariant_factors(Matrix m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<std::int64_t> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Smallest nonzero entry of the remaining block as pivot.
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = t; r < rows; ++r) {
            for (std::size_t c = t; c < cols; ++c) {
                if (m[r][c] != 0 && (pr == rows || abs128(m[r][c]) < abs128(m[pr][pc]))) {
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr == rows) break;
        std::swap(m[t], m[pr]);
        for (auto& row : m) std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (m[r][t] == 0) continue;
                const __int128 q = m[r][t] / m[t][t];
                for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
                if (m[r][t] != 0) {
                    std::swap(m[t], m[r]);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (m[t][c] == 0) continue;
                const __int128 q = m[t][c] / m[t][t];
                for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
                if (m[t][c] != 0) {
                    for (auto& row : m) std::swap(row[t], row[c]);
                    clean = false;
                }
            }
        }
        diag.push_back(static_cast<std::int64_t>(abs128(m[t][t])));
        ++t;
    }
    // gcd/lcm sweep turns any diagonal into the chain.
    for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            const std::int64_t g = std::gcd(diag[i], diag[j]);
            const std::int64_t l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    return diag;
}

struct Group {
    std::size_t rank = 0;
    std::vector<std::int64_t> torsion;
};

/// Integral homology in degrees 0..dim.
inline std::vector<Group> homology(const lscat::DeltaComplex& c) {
    const int n = c.dim();
    std::vector<std::vector<std::int64_t>> factors(n + 2);
    for (int k = 1; k <= n; ++k) factors[k] = invariant_factors(boundary(c, k));
    std::vector<Group> out(n + 1);
    for (int k = 0; k <= n; ++k) {
        const std::size_t rank_out = factors[k].size();
        const std::size_t rank_in = k + 1 <= n ? factors[k + 1].size() : 0;
        out[k].rank = c.count(k) - rank_out - rank_in;
        if (k + 1 <= n) {
            for (auto d : factors[k + 1]) {
                if (d > 1) out[k].torsion.push_back(d);
            }
        }
    }
    return out;
}

/// "Z", "Z^3 + Z/2", "0"
inline std::string format(const Group& g) {
    std::vector<std::string> parts;
    if (g.rank == 1) parts.push_back("Z");
    if (g.rank > 1) parts.push_back("Z^" + std::to_string(g.rank));
    for (auto t : g.torsion) parts.push_back("Z/" + std::to_string(t));
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

inline std::string format(const std::vector<Group>& h) {
    std::string s;
    for (std::size_t k = 0; k < h.size(); ++k) s += (k ? "; " : "") + format(h[k]);
    return s;
}

/// Rank of the boundary map mod 2 by bit-packed elimination.
inline std::size_t rank_gf2(const lscat::DeltaComplex& c, int k) {
    if (k < 1 || k > c.dim()) return 0;
    const std::size_t rows = c.count(k - 1), words = (rows + 63) / 64;
    std::vector<std::vector<std::uint64_t>> cols;
    for (std::size_t s = 0; s < c.count(k); ++s) {
        std::vector<std::uint64_t> v(words, 0);
        for (int i = 0; i <= k; ++i) {
            const std::size_t f = c.face(k, s, i);
            v[f / 64] ^= std::uint64_t{1} << (f % 64);
        }
        cols.push_back(std::move(v));
    }
    std::size_t rank = 0;
    for (std::size_t bit = 0; bit < rows && rank < cols.size(); ++bit) {
        const std::size_t w = bit / 64;
        const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
        std::size_t piv = rank;
        while (piv < cols.size() && !(cols[piv][w] & mask)) ++piv;
        if (piv == cols.size()) continue;
        std::swap(cols[rank], cols[piv]);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j != rank && (cols[j][w] & mask)) {
                for (std::size_t x = 0; x < words; ++x) cols[j][x] ^= cols[rank][x];
            }
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::size_t> betti_gf2(const lscat::DeltaComplex& c) {
    std::vector<std::size_t> b;
    for (int k = 0; k <= c.dim(); ++k) b.push_back(c.count(k) - rank_gf2(c, k) - rank_gf2(c, k + 1));
    return b;
}

/// dim H^k(X; Z/p) from integral homology by universal coefficients.
inline std::size_t uct_dimension(const std::vector<Group>& h, int k, std::int64_t p) {
    auto tp = [&](const Group& g) {
        return static_cast<std::size_t>(std::count_if(g.torsion.begin(), g.torsion.end(),
                                                      [&](std::int64_t t) { return t % p == 0; }));
    };
    std::size_t d = h[k].rank + tp(h[k]);
    if (k > 0) d += tp(h[k - 1]);
    return d;
}

}  // namespace oracle
