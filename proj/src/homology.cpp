#include <sstream>

#include "lscat/error.hpp"
#include "lscat/exact_algebra.hpp"

namespace lscat {

IntMatrix boundary_matrix(const DeltaComplex& complex, int k) {
    IntMatrix d(complex.count(k - 1), complex.count(k));
    if (k <= 0 || k > complex.dim()) return d;
    for (Index s = 0; s < complex.count(k); ++s) {
        for (int i = 0; i <= k; ++i) {
            d(complex.face(k, s, i), s) += (i % 2 == 0) ? 1 : -1;
        }
    }
    return d;
}

namespace {

struct DegreeData {
    Index rank = 0;                   // rank of the boundary map
    std::vector<mpz_class> factors;   // its invariant factors
};

DegreeData boundary_data(const DeltaComplex& complex, int k) {
    DegreeData out;
    if (k <= 0 || k > complex.dim()) return out;
    out.factors = invariant_factors(boundary_matrix(complex, k));
    out.rank = out.factors.size();
    return out;
}

HomologyGroup assemble(Index cells, const DegreeData& in, const DegreeData& out) {
    HomologyGroup g;
    g.rank = cells - in.rank - out.rank;
    for (const auto& f : out.factors) {
        if (f > 1) g.torsion.push_back(f);
    }
    return g;
}

}  // namespace

HomologyGroup integral_homology_degree(const DeltaComplex& complex, int k) {
    return assemble(complex.count(k), boundary_data(complex, k), boundary_data(complex, k + 1));
}

HomologyGroup group_from_cyclic_orders(const std::vector<mpz_class>& orders, std::uint32_t full) {
    IntMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
    HomologyGroup g;
    for (auto& f : invariant_factors(diag)) {
        if (full != 0 && f == full) {
            ++g.rank;
        } else if (f > 1) {
            g.torsion.push_back(f);
        }
    }
    return g;
}

HomologyGroup cokernel_of_rows(const IntMatrix& relations) {
    auto factors = invariant_factors(relations);
    HomologyGroup g;
    g.rank = relations.cols() - factors.size();
    for (auto& f : factors) {
        if (f > 1) g.torsion.push_back(f);
    }
    return g;
}

Index betti0(const DeltaComplex& complex) {
    if (complex.dim() == 0) return complex.count(0);
    std::vector<ModVector> rows;
    rows.reserve(complex.count(1));
    for (Index e = 0; e < complex.count(1); ++e) {
        ModVector r(complex.count(0), 0);
        r[complex.face(1, e, 0)] ^= 1;
        r[complex.face(1, e, 1)] ^= 1;
        rows.push_back(std::move(r));
    }
    return complex.count(0) - rank_mod(std::move(rows), complex.count(0), 2);
}

HomologyGroups homology(const DeltaComplex& complex, std::uint32_t modulus) {
    if (modulus == 1) throw Error(ErrorCode::InvalidArgument, "coefficients Z/1 are trivial");
    HomologyGroups out;
    out.modulus = modulus;
    const int n = complex.dim();

    if (modulus != 0 && is_prime(modulus)) {
        std::vector<Index> ranks(static_cast<std::size_t>(n + 2), 0);
        for (int k = 1; k <= n; ++k) {
            auto d = boundary_matrix(complex, k);
            std::vector<ModVector> rows(d.rows(), ModVector(d.cols(), 0));
            for (Index r = 0; r < d.rows(); ++r) {
                for (Index c = 0; c < d.cols(); ++c) {
                    rows[r][c] = reduce_mod(d(r, c).get_si(), modulus);
                }
            }
            ranks[k] = rank_mod(std::move(rows), d.cols(), modulus);
        }
        for (int k = 0; k <= n; ++k) {
            out.degrees.push_back({complex.count(k) - ranks[k] - ranks[k + 1], {}});
        }
        return out;
    }

    std::vector<DegreeData> data(static_cast<std::size_t>(n + 2));
    for (int k = 1; k <= n; ++k) data[k] = boundary_data(complex, k);
    std::vector<HomologyGroup> integral;
    for (int k = 0; k <= n; ++k) integral.push_back(assemble(complex.count(k), data[k], data[k + 1]));
    if (modulus == 0) {
        out.degrees = std::move(integral);
        return out;
    }
    // H_k(X; Z/m) = H_k (x) Z/m  +  Tor(H_{k-1}, Z/m)
    const mpz_class m = modulus;
    for (int k = 0; k <= n; ++k) {
        std::vector<mpz_class> orders(integral[k].rank, m);
        for (const auto& t : integral[k].torsion) orders.push_back(gcd(t, m));
        if (k > 0) {
            for (const auto& t : integral[k - 1].torsion) orders.push_back(gcd(t, m));
        }
        out.degrees.push_back(group_from_cyclic_orders(orders, modulus));
    }
    return out;
}

std::string format_group(const HomologyGroup& group, std::uint32_t modulus) {
    std::vector<std::string> terms;
    const std::string ring = modulus == 0 ? "Z" : "(Z/" + std::to_string(modulus) + ")";
    if (group.rank == 1) {
        terms.push_back(modulus == 0 ? "Z" : "Z/" + std::to_string(modulus));
    } else if (group.rank > 1) {
        terms.push_back(ring + "^" + std::to_string(group.rank));
    }
    for (const auto& t : group.torsion) terms.push_back("Z/" + t.get_str());
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
    return out;
}

std::string HomologyGroups::to_string() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        out << "H" << k << " = " << format_group(degrees[k], modulus) << "\n";
    }
    return out.str();
}

}  // namespace lscat
