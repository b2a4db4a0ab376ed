#include <algorithm>

#include "lscat/error.hpp"
#include "lscat/exact_algebra.hpp"

namespace lscat {

namespace {

// Rows spanning B^k: the coboundary of the indicator of each (k-1)-simplex.
std::vector<ModVector> coboundary_span(const DeltaComplex& complex, int k, std::uint32_t m) {
    std::vector<ModVector> rows(complex.count(k - 1), ModVector(complex.count(k), 0));
    for (Index s = 0; s < complex.count(k); ++s) {
        for (int i = 0; i <= k; ++i) {
            auto& slot = rows[complex.face(k, s, i)][s];
            slot = (slot + (i % 2 == 0 ? 1 : m - 1)) % m;
        }
    }
    return rows;
}

IntMatrix integral_coboundary(const DeltaComplex& complex, int k) {
    // delta_k is the transpose of the boundary C_{k+1} -> C_k.
    if (k >= complex.dim()) return IntMatrix(0, complex.count(k));
    return boundary_matrix(complex, k + 1).transpose();
}

// H^k(X; Z/m) for composite m from the integral Smith forms of delta_k and
// delta_{k-1}; see CohomologyBasis for the output contract.
void composite_degree(const DeltaComplex& complex, int k, std::uint32_t m,
                      std::vector<ModVector>& reps, std::vector<std::uint32_t>& orders) {
    const Index n = complex.count(k);
    const mpz_class mm = m;
    SmithForm outgoing = smith_normal_form(integral_coboundary(complex, k));

    // In coordinates y = V^{-1} x the kernel of delta_k mod m is
    // { y : y_i in f_i Z/m } with f_i = m / gcd(d_i, m); generator i has
    // order g_i = gcd(d_i, m).
    std::vector<mpz_class> f(n), g(n);
    for (Index i = 0; i < n; ++i) {
        mpz_class d = (i < outgoing.diagonal.rows()) ? outgoing.diagonal(i, i) : mpz_class(0);
        g[i] = gcd(d, mm);
        f[i] = mm / g[i];
    }
    std::vector<Index> live;
    for (Index i = 0; i < n; ++i) {
        if (g[i] > 1) live.push_back(i);
    }

    // Relations: images of delta_{k-1} written in the t-coordinates y_i = f_i t_i.
    IntMatrix incoming = k == 0 ? IntMatrix(n, 0) : integral_coboundary(complex, k - 1);
    const Index rel_cols = incoming.cols();
    IntMatrix relation(live.size(), rel_cols + live.size());
    for (Index c = 0; c < rel_cols; ++c) {
        for (Index li = 0; li < live.size(); ++li) {
            const Index i = live[li];
            mpz_class y = 0;
            for (Index j = 0; j < n; ++j) {
                if (sgn(incoming(j, c)) != 0) y += outgoing.right_inverse(i, j) * incoming(j, c);
            }
            mpz_class ym;
            mpz_fdiv_r(ym.get_mpz_t(), y.get_mpz_t(), mm.get_mpz_t());
            if (!mpz_divisible_p(ym.get_mpz_t(), f[i].get_mpz_t())) {
                throw Error(ErrorCode::MalformedComplex, "coboundary image outside the cocycles");
            }
            mpz_class t = ym / f[i];
            mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), g[i].get_mpz_t());
            relation(li, c) = t;
        }
    }
    for (Index li = 0; li < live.size(); ++li) relation(li, rel_cols + li) = g[live[li]];

    SmithForm quotient = smith_normal_form(relation);
    for (Index j = 0; j < live.size(); ++j) {
        const mpz_class& order = quotient.diagonal(j, j);
        if (order == 1) continue;
        // t = W^{-1} e_j, then x = V (f . t) mod m.
        std::vector<mpz_class> y(n, 0);
        for (Index li = 0; li < live.size(); ++li) {
            y[live[li]] = f[live[li]] * quotient.left_inverse(li, j);
        }
        ModVector x(n, 0);
        for (Index r = 0; r < n; ++r) {
            mpz_class acc = 0;
            for (Index i = 0; i < n; ++i) {
                if (sgn(y[i]) != 0) acc += outgoing.right(r, i) * y[i];
            }
            mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), mm.get_mpz_t());
            x[r] = static_cast<std::uint32_t>(acc.get_ui());
        }
        reps.push_back(std::move(x));
        orders.push_back(static_cast<std::uint32_t>(order.get_ui()));
    }
}

}  // namespace

CohomologyBasis cohomology_basis(const DeltaComplex& complex, std::uint32_t modulus) {
    if (modulus < 2 || modulus >= (1u << 16)) {
        throw Error(ErrorCode::InvalidArgument, "modulus must lie in [2, 65535]");
    }
    CohomologyBasis basis;
    basis.modulus_ = modulus;
    const int n = complex.dim();
    basis.reps_.resize(static_cast<std::size_t>(n + 1));
    basis.orders_.resize(static_cast<std::size_t>(n + 1));

    if (!is_prime(modulus)) {
        for (int k = 0; k <= n; ++k) composite_degree(complex, k, modulus, basis.reps_[k], basis.orders_[k]);
        return basis;
    }

    for (int k = 0; k <= n; ++k) {
        EchelonBasis echelon(complex.count(k), modulus);
        if (k > 0) {
            for (auto& row : coboundary_span(complex, k, modulus)) echelon.insert(std::move(row));
        }
        std::vector<ModVector> cocycles;
        if (k < n) {
            cocycles = nullspace_mod(coboundary_rows(complex, k, modulus), complex.count(k), modulus);
        } else {
            // delta_n = 0: every cochain is a cocycle.
            for (Index s = 0; s < complex.count(k); ++s) {
                ModVector e(complex.count(k), 0);
                e[s] = 1;
                cocycles.push_back(std::move(e));
            }
        }
        for (auto& z : cocycles) {
            const Index label = basis.reps_[k].size();
            if (auto row = echelon.insert(std::move(z), label)) {
                basis.reps_[k].push_back(echelon.row(*row));
                basis.orders_[k].push_back(modulus);
            }
        }
        basis.echelons_.push_back(std::move(echelon));
    }
    return basis;
}

ModVector CohomologyBasis::coordinates(int k, ModVector cocycle) const {
    if (echelons_.empty()) {
        throw Error(ErrorCode::CompositeModulus, "class coordinates need a prime modulus");
    }
    if (k < 0 || k > top_degree()) throw Error(ErrorCode::DegreeOverflow, "degree out of range");
    ModVector coords(reps_[k].size(), 0);
    echelons_[k].reduce(cocycle, &coords);
    if (std::any_of(cocycle.begin(), cocycle.end(), [](std::uint32_t v) { return v != 0; })) {
        throw Error(ErrorCode::InvalidArgument, "cochain is not a cocycle");
    }
    return coords;
}

bool CohomologyBasis::is_coboundary(int k, ModVector cocycle) const {
    auto coords = coordinates(k, std::move(cocycle));
    return std::all_of(coords.begin(), coords.end(), [](std::uint32_t v) { return v == 0; });
}

}  // namespace lscat
