#pragma once

// Structural properties checked on the generators and all their pairwise
// connected sums. Each check returns human-readable failures (empty = pass).

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lscat/cohomology_ring.hpp"
#include "lscat/delta_complex.hpp"
#include "lscat/exact_algebra.hpp"
#include "lscat/pi1.hpp"
#include "support/oracles.hpp"

namespace props {

using lscat::DeltaComplex;
using lscat::ModVector;

struct Named {
    std::string name;
    DeltaComplex complex;
};

inline std::vector<Named> generators() {
    std::vector<Named> out;
    for (const char* n : {"S3", "S1xS2", "S1~S2", "T3", "RP2xS1", "RP3"}) out.push_back({n, lscat::generator(n)});
    out.push_back({"L(3,1)", lscat::gen::lens(3, 1)});
    out.push_back({"L(5,2)", lscat::gen::lens(5, 2)});
    return out;
}

/// Generators followed by every unordered pair (including squares).
inline std::vector<Named> corpus() {
    auto g = generators();
    std::vector<Named> out = g;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i; j < g.size(); ++j) {
            out.push_back({g[i].name + " # " + g[j].name, lscat::connected_sum(g[i].complex, g[j].complex)});
        }
    }
    return out;
}

inline ModVector random_cochain(std::mt19937& rng, std::size_t n, std::uint32_t m) {
    std::uniform_int_distribution<std::uint32_t> d(0, m - 1);
    ModVector v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

inline bool all_zero(const ModVector& v) {
    for (auto x : v) {
        if (x != 0) return false;
    }
    return true;
}

inline std::vector<std::string> boundary_squares(const Named& x) {
    std::vector<std::string> f;
    for (int k = 2; k <= x.complex.dim(); ++k) {
        if (!(lscat::boundary_matrix(x.complex, k - 1) * lscat::boundary_matrix(x.complex, k)).is_zero()) {
            f.push_back(x.name + ": dd != 0 in degree " + std::to_string(k));
        }
    }
    return f;
}

inline std::vector<std::string> coboundary_squares(const Named& x, std::mt19937& rng) {
    std::vector<std::string> f;
    for (std::uint32_t m : {2u, 5u, 6u}) {
        for (int k = 0; k + 2 <= x.complex.dim(); ++k) {
            for (int t = 0; t < 10; ++t) {
                const auto c = random_cochain(rng, x.complex.count(k), m);
                const auto dd = lscat::coboundary(x.complex, k + 1, lscat::coboundary(x.complex, k, c, m), m);
                if (!all_zero(dd)) f.push_back(x.name + ": delta delta != 0 mod " + std::to_string(m));
            }
        }
    }
    return f;
}

/// delta(a u b) = delta a u b + (-1)^p a u delta b, on random cochains.
inline std::vector<std::string> leibniz(const Named& x, std::mt19937& rng, int trials) {
    std::vector<std::string> f;
    const auto& c = x.complex;
    const std::uint32_t moduli[] = {2, 3, 5, 6};
    for (int t = 0; t < trials; ++t) {
        const std::uint32_t m = moduli[t % 4];
        const int p = static_cast<int>(rng() % 3);
        const int q = static_cast<int>(rng() % (3 - p));
        const auto a = random_cochain(rng, c.count(p), m);
        const auto b = random_cochain(rng, c.count(q), m);
        const auto lhs = lscat::coboundary(c, p + q, lscat::cup_product(c, p, a, q, b, m), m);
        const auto r1 = lscat::cup_product(c, p + 1, lscat::coboundary(c, p, a, m), q, b, m);
        const auto r2 = lscat::cup_product(c, p, a, q + 1, lscat::coboundary(c, q, b, m), m);
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            const std::uint32_t rhs = (r1[i] + (p % 2 == 0 ? r2[i] : m - r2[i])) % m;
            if (lhs[i] != rhs) {
                f.push_back(x.name + ": Leibniz fails for p=" + std::to_string(p) + " q=" + std::to_string(q) +
                            " mod " + std::to_string(m));
                return f;
            }
        }
    }
    return f;
}

inline std::vector<std::string> duality_and_euler(const Named& x) {
    std::vector<std::string> f;
    const auto v = lscat::validate(x.complex);
    if (v.euler_characteristic != 0) f.push_back(x.name + ": euler characteristic " + std::to_string(v.euler_characteristic));
    if (!v.is_closed_pseudo_3_manifold) f.push_back(x.name + ": not closed");
    if (!lscat::ring_table(x.complex, 2).pairing_nondegenerate()) f.push_back(x.name + ": Z/2 pairing degenerate");
    return f;
}

inline std::vector<std::string> universal_coefficients(const Named& x) {
    std::vector<std::string> f;
    const auto h = oracle::homology(x.complex);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto basis = lscat::cohomology_basis(x.complex, p);
        const auto hp = lscat::homology(x.complex, p);
        for (int k = 0; k <= x.complex.dim(); ++k) {
            const auto want = oracle::uct_dimension(h, k, p);
            if (basis.dimension(k) != want || hp.degrees[k].rank != want) {
                f.push_back(x.name + ": UCT mismatch in degree " + std::to_string(k) + " mod " + std::to_string(p));
            }
        }
    }
    return f;
}

inline std::vector<std::string> abelianization_is_h1(const Named& x) {
    const auto ab = lscat::abelianization(lscat::edge_path_presentation(x.complex));
    oracle::Group g;
    g.rank = ab.rank;
    for (const auto& t : ab.torsion) g.torsion.push_back(t.get_si());
    const std::string got = oracle::format(g), want = oracle::format(oracle::homology(x.complex)[1]);
    if (got != want) return {x.name + ": abelianization " + got + " vs H1 " + want};
    return {};
}

/// Runs every property; returns (checks run, failures).
inline std::pair<std::size_t, std::vector<std::string>> run_all(int leibniz_trials = 1000) {
    std::mt19937 rng(20240601);
    std::vector<std::string> failures;
    std::size_t checks = 0;
    auto add = [&](std::vector<std::string> f) {
        ++checks;
        failures.insert(failures.end(), f.begin(), f.end());
    };
    for (const auto& x : corpus()) {
        add(boundary_squares(x));
        add(coboundary_squares(x, rng));
        add(leibniz(x, rng, leibniz_trials));
        add(duality_and_euler(x));
        add(universal_coefficients(x));
        add(abelianization_is_h1(x));
    }
    return {checks, failures};
}

}  // namespace props
