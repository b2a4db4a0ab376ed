#include "lscat/cohomology_ring.hpp"

#include <algorithm>
#include <sstream>

#include "lscat/error.hpp"

namespace lscat {

ModVector cup_product(const DeltaComplex& complex, int p, std::span<const std::uint32_t> a, int q,
                      std::span<const std::uint32_t> b, std::uint32_t m) {
    const int n = p + q;
    if (p < 0 || q < 0 || n > complex.dim()) {
        throw Error(ErrorCode::DegreeOverflow, "cup product degree " + std::to_string(n) +
                                                   " exceeds dimension " + std::to_string(complex.dim()));
    }
    if (a.size() != complex.count(p) || b.size() != complex.count(q)) {
        throw Error(ErrorCode::InvalidArgument, "cochain length does not match the complex");
    }
    ModVector out(complex.count(n), 0);
    for (Index s = 0; s < out.size(); ++s) {
        const std::uint64_t x = a[complex.front_face(n, s, p)];
        if (x == 0) continue;
        const std::uint64_t y = b[complex.back_face(n, s, p)];
        out[s] = static_cast<std::uint32_t>(x * y % m);
    }
    return out;
}

namespace {

bool closed_pseudomanifold(const DeltaComplex& complex) {
    const int n = complex.dim();
    if (n == 0) return complex.count(0) == 1;
    std::vector<int> incidence(complex.count(n - 1), 0);
    for (Index s = 0; s < complex.count(n); ++s) {
        for (int i = 0; i <= n; ++i) ++incidence[complex.face(n, s, i)];
    }
    return std::all_of(incidence.begin(), incidence.end(), [](int c) { return c == 2; });
}

}  // namespace

std::uint32_t kronecker_top(const DeltaComplex& complex, std::span<const std::uint32_t> cocycle,
                            std::uint32_t m) {
    const int n = complex.dim();
    if (!closed_pseudomanifold(complex)) {
        throw Error(ErrorCode::NotClosed, "no fundamental cycle: complex is not closed");
    }
    if (cocycle.size() != complex.count(n)) {
        throw Error(ErrorCode::InvalidArgument, "cochain length does not match the complex");
    }
    std::uint64_t acc = 0;
    if (m == 2) {
        for (auto v : cocycle) acc += v;
        return static_cast<std::uint32_t>(acc % 2);
    }
    auto signs = orientation_signs(complex);
    if (!signs) throw Error(ErrorCode::NonOrientable, "pairing over Z/" + std::to_string(m) + " needs an orientation");
    for (Index s = 0; s < cocycle.size(); ++s) {
        acc += (*signs)[s] > 0 ? cocycle[s] : (m - cocycle[s]) % m;
    }
    return static_cast<std::uint32_t>(acc % m);
}

// ---------------------------------------------------------------------------

CohomologyRing::CohomologyRing(std::uint32_t modulus, std::vector<std::vector<std::string>> labels)
    : modulus_(modulus), labels_(std::move(labels)) {
    const int top = top_degree();
    table_.resize(labels_.size());
    for (int k = 0; k <= top; ++k) {
        table_[k].resize(labels_.size());
        for (int l = 0; k + l <= top; ++l) {
            table_[k][l].assign(dimension(k) * dimension(l), ModVector(dimension(k + l), 0));
        }
    }
}

Index CohomologyRing::dimension(int k) const {
    if (k < 0 || k > top_degree()) return 0;
    return labels_[k].size();
}

const ModVector& CohomologyRing::product(int k, Index i, int l, Index j) const {
    if (k + l > top_degree()) throw Error(ErrorCode::DegreeOverflow, "product beyond the top degree");
    return table_[k][l][i * dimension(l) + j];
}

void CohomologyRing::set_product(int k, Index i, int l, Index j, ModVector coords) {
    if (k + l > top_degree()) throw Error(ErrorCode::DegreeOverflow, "product beyond the top degree");
    table_[k][l][i * dimension(l) + j] = std::move(coords);
}

RingElement CohomologyRing::basis(int k, Index i) const {
    RingElement e{k, ModVector(dimension(k), 0)};
    e.coords.at(i) = 1;
    return e;
}

RingElement CohomologyRing::multiply(const RingElement& a, const RingElement& b) const {
    const int n = a.degree + b.degree;
    if (n > top_degree()) throw Error(ErrorCode::DegreeOverflow, "product beyond the top degree");
    RingElement out{n, ModVector(dimension(n), 0)};
    const std::uint64_t m = modulus_;
    for (Index i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0) continue;
        for (Index j = 0; j < b.coords.size(); ++j) {
            if (b.coords[j] == 0) continue;
            const std::uint64_t c = std::uint64_t{a.coords[i]} * b.coords[j] % m;
            const auto& prod = product(a.degree, i, b.degree, j);
            for (Index r = 0; r < prod.size(); ++r) {
                out.coords[r] = static_cast<std::uint32_t>((out.coords[r] + c * prod[r]) % m);
            }
        }
    }
    return out;
}

bool CohomologyRing::is_zero(const RingElement& a) const {
    return std::all_of(a.coords.begin(), a.coords.end(), [](std::uint32_t v) { return v == 0; });
}

std::optional<std::uint32_t> CohomologyRing::evaluate(const RingElement& top) const {
    if (!pairing_ || top.degree != top_degree()) return std::nullopt;
    std::uint64_t acc = 0;
    for (Index i = 0; i < top.coords.size(); ++i) acc += std::uint64_t{top.coords[i]} * (*pairing_)[i] % modulus_;
    return static_cast<std::uint32_t>(acc % modulus_);
}

bool CohomologyRing::pairing_nondegenerate() const {
    if (!pairing_) return false;
    const int n = top_degree();
    for (int k = 0; k <= n; ++k) {
        if (dimension(k) != dimension(n - k)) return false;
        std::vector<ModVector> rows;
        for (Index i = 0; i < dimension(k); ++i) {
            ModVector row(dimension(n - k), 0);
            for (Index j = 0; j < dimension(n - k); ++j) {
                row[j] = *evaluate(multiply(basis(k, i), basis(n - k, j)));
            }
            rows.push_back(std::move(row));
        }
        if (rank_mod(rows, dimension(n - k), modulus_) != dimension(k)) return false;
    }
    return true;
}

bool CohomologyRing::is_associative() const {
    const int n = top_degree();
    if (dimension(0) == 1) {
        for (int k = 0; k <= n; ++k) {
            for (Index i = 0; i < dimension(k); ++i) {
                auto e = basis(k, i);
                if (multiply(basis(0, 0), e).coords != e.coords) return false;
                if (multiply(e, basis(0, 0)).coords != e.coords) return false;
            }
        }
    }
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; a + b <= n; ++b) {
            for (int c = 1; a + b + c <= n; ++c) {
                for (Index i = 0; i < dimension(a); ++i) {
                    for (Index j = 0; j < dimension(b); ++j) {
                        for (Index k = 0; k < dimension(c); ++k) {
                            auto left = multiply(multiply(basis(a, i), basis(b, j)), basis(c, k));
                            auto right = multiply(basis(a, i), multiply(basis(b, j), basis(c, k)));
                            if (left.coords != right.coords) return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

std::string basis_label(int k, Index i) {
    if (k == 0) return i == 0 ? "1" : "x0_" + std::to_string(i);
    return "x" + std::to_string(k) + "_" + std::to_string(i);
}

}  // namespace

CohomologyRing ring_table(const DeltaComplex& complex, std::uint32_t p) {
    if (!is_prime(p)) {
        throw Error(ErrorCode::CompositeModulus, "ring tables need a prime modulus, got " + std::to_string(p));
    }
    const CohomologyBasis cb = cohomology_basis(complex, p);
    const int n = complex.dim();
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        for (Index i = 0; i < cb.dimension(k); ++i) labels[k].push_back(basis_label(k, i));
    }
    CohomologyRing ring(p, std::move(labels));
    for (int k = 0; k <= n; ++k) {
        for (int l = 0; k + l <= n; ++l) {
            for (Index i = 0; i < cb.dimension(k); ++i) {
                for (Index j = 0; j < cb.dimension(l); ++j) {
                    auto c = cup_product(complex, k, cb.representatives(k)[i], l, cb.representatives(l)[j], p);
                    ring.set_product(k, i, l, j, cb.coordinates(k + l, std::move(c)));
                }
            }
        }
    }
    if (closed_pseudomanifold(complex) && (p == 2 || orientation_signs(complex))) {
        ModVector values;
        for (const auto& rep : cb.representatives(n)) values.push_back(kronecker_top(complex, rep, p));
        ring.set_pairing(std::move(values));
    }
    return ring;
}

CohomologyRing sphere_ring(int n, std::uint32_t p) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative sphere dimension");
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(n + 1));
    labels[0].push_back("1");
    if (n > 0) labels[n].push_back("s" + std::to_string(n));
    CohomologyRing ring(p, std::move(labels));
    ring.set_product(0, 0, 0, 0, n == 0 ? ModVector{1} : ModVector{1});
    if (n > 0) {
        ring.set_product(0, 0, n, 0, {1});
        ring.set_product(n, 0, 0, 0, {1});
    }
    ring.set_pairing({1});
    return ring;
}

CohomologyRing kunneth_tensor(const CohomologyRing& a, const CohomologyRing& b) {
    if (a.modulus() != b.modulus()) {
        throw Error(ErrorCode::ModulusMismatch, "tensor of rings over Z/" + std::to_string(a.modulus()) +
                                                    " and Z/" + std::to_string(b.modulus()));
    }
    const std::uint32_t p = a.modulus();
    if (!is_prime(p)) throw Error(ErrorCode::CompositeModulus, "tensor rings need a prime modulus");
    const int top = a.top_degree() + b.top_degree();

    // Basis of degree n: pairs (k, i; n - k, j) ordered by k, i, j.
    struct Pair {
        int k;
        Index i;
        Index j;
    };
    std::vector<std::vector<Pair>> pairs(static_cast<std::size_t>(top + 1));
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (Index i = 0; i < a.dimension(k); ++i) {
                for (Index j = 0; j < b.dimension(n - k); ++j) {
                    pairs[n].push_back({k, i, j});
                    const std::string& la = a.label(k, i);
                    const std::string& lb = b.label(n - k, j);
                    labels[n].push_back(lb == "1" ? la : la == "1" ? lb : la + "|" + lb);
                }
            }
        }
    }
    auto index_of = [&](int n, int k, Index i, Index j) -> Index {
        Index idx = 0;
        for (int kk = 0; kk < k; ++kk) idx += a.dimension(kk) * b.dimension(n - kk);
        return idx + i * b.dimension(n - k) + j;
    };

    CohomologyRing ring(p, std::move(labels));
    for (int n1 = 0; n1 <= top; ++n1) {
        for (int n2 = 0; n1 + n2 <= top; ++n2) {
            for (Index x = 0; x < pairs[n1].size(); ++x) {
                for (Index y = 0; y < pairs[n2].size(); ++y) {
                    const auto [k1, i1, j1] = pairs[n1][x];
                    const auto [k2, i2, j2] = pairs[n2][y];
                    const int l1 = n1 - k1, l2 = n2 - k2;
                    ModVector coords(pairs[n1 + n2].size(), 0);
                    if (k1 + k2 <= a.top_degree() && l1 + l2 <= b.top_degree()) {
                        const auto& pa = a.product(k1, i1, k2, i2);
                        const auto& pb = b.product(l1, j1, l2, j2);
                        const std::uint64_t sign = ((l1 * k2) % 2 == 0) ? 1 : p - 1;
                        for (Index r = 0; r < pa.size(); ++r) {
                            if (pa[r] == 0) continue;
                            for (Index s = 0; s < pb.size(); ++s) {
                                if (pb[s] == 0) continue;
                                auto& slot = coords[index_of(n1 + n2, k1 + k2, r, s)];
                                slot = static_cast<std::uint32_t>((slot + sign * pa[r] % p * pb[s]) % p);
                            }
                        }
                    }
                    ring.set_product(n1, x, n2, y, std::move(coords));
                }
            }
        }
    }
    if (a.pairing() && b.pairing()) {
        ModVector values(pairs[top].size(), 0);
        for (Index x = 0; x < pairs[top].size(); ++x) {
            const auto [k, i, j] = pairs[top][x];
            if (k != a.top_degree()) continue;
            values[x] = static_cast<std::uint32_t>(std::uint64_t{(*a.pairing())[i]} * (*b.pairing())[j] % p);
        }
        ring.set_pairing(std::move(values));
    }
    return ring;
}

// ---------------------------------------------------------------------------

CupLengthWitness cup_length(const CohomologyRing& ring) {
    const int n = ring.top_degree();
    const std::uint32_t p = ring.modulus();
    struct Monomial {
        std::vector<std::pair<int, Index>> factors;
        RingElement value;
    };
    std::vector<Monomial> level;
    for (int d = 1; d <= n; ++d) {
        for (Index i = 0; i < ring.dimension(d); ++i) level.push_back({{{d, i}}, ring.basis(d, i)});
    }
    CupLengthWitness best;
    int length = 0;
    while (!level.empty()) {
        ++length;
        best.factors = level.front().factors;
        best.product_class = level.front().value;
        best.length = length;

        std::vector<EchelonBasis> span;
        for (int d = 0; d <= n; ++d) span.emplace_back(ring.dimension(d), p);
        std::vector<Monomial> next;
        // Two passes: repeated leading factors first, so squares show up in witnesses.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& mono : level) {
                for (int e = 1; e + mono.value.degree <= n; ++e) {
                    for (Index i = 0; i < ring.dimension(e); ++i) {
                        const bool repeat = mono.factors.front() == std::pair<int, Index>{e, i};
                        if (repeat != (pass == 0)) continue;
                        RingElement v = ring.multiply(ring.basis(e, i), mono.value);
                        if (ring.is_zero(v)) continue;
                        if (!span[v.degree].insert(v.coords)) continue;
                        Monomial m{{{e, i}}, std::move(v)};
                        m.factors.insert(m.factors.end(), mono.factors.begin(), mono.factors.end());
                        next.push_back(std::move(m));
                    }
                }
            }
        }
        level = std::move(next);
    }
    return best;
}

bool witness_holds(const CohomologyRing& ring, const CupLengthWitness& w) {
    if (static_cast<int>(w.factors.size()) != w.length) return false;
    if (w.length == 0) return true;
    for (const auto& [d, i] : w.factors) {
        if (d < 1 || d > ring.top_degree() || i >= ring.dimension(d)) return false;
    }
    RingElement acc = ring.basis(w.factors.front().first, w.factors.front().second);
    for (std::size_t t = 1; t < w.factors.size(); ++t) {
        const auto [d, i] = w.factors[t];
        if (acc.degree + d > ring.top_degree()) return false;
        acc = ring.multiply(acc, ring.basis(d, i));
    }
    return !ring.is_zero(acc) && acc.degree == w.product_class.degree && acc.coords == w.product_class.coords;
}

namespace {

std::string format_element(const CohomologyRing& ring, const RingElement& e) {
    std::string out;
    for (Index i = 0; i < e.coords.size(); ++i) {
        if (e.coords[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (e.coords[i] != 1) out += std::to_string(e.coords[i]) + "*";
        out += ring.label(e.degree, i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string format_witness(const CohomologyRing& ring, const CupLengthWitness& w) {
    if (w.length == 0) return "no nonzero positive-degree class";
    std::string out;
    for (const auto& [d, i] : w.factors) {
        if (!out.empty()) out += " u ";
        out += ring.label(d, i);
    }
    return out + " = " + format_element(ring, w.product_class);
}

std::string format_ring(const CohomologyRing& ring) {
    std::ostringstream out;
    out << "coefficients Z/" << ring.modulus() << "\n";
    for (int k = 0; k <= ring.top_degree(); ++k) {
        out << "H^" << k << ": dim " << ring.dimension(k);
        for (Index i = 0; i < ring.dimension(k); ++i) out << (i ? ", " : " [") << ring.label(k, i);
        out << (ring.dimension(k) ? "]\n" : "\n");
    }
    for (int k = 1; k <= ring.top_degree(); ++k) {
        for (int l = 1; k + l <= ring.top_degree(); ++l) {
            for (Index i = 0; i < ring.dimension(k); ++i) {
                for (Index j = 0; j < ring.dimension(l); ++j) {
                    RingElement e{k + l, ring.product(k, i, l, j)};
                    if (ring.is_zero(e)) continue;
                    out << ring.label(k, i) << " u " << ring.label(l, j) << " = " << format_element(ring, e) << "\n";
                }
            }
        }
    }
    if (ring.pairing()) {
        out << "pairing on H^" << ring.top_degree() << ":";
        for (auto v : *ring.pairing()) out << " " << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace lscat
