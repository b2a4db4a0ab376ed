#include <algorithm>
#include <optional>
#include <utility>

#include "lscat/error.hpp"
#include "lscat/exact_algebra.hpp"
#include "lscat/kernels.hpp"

namespace lscat {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    long t = 0, new_t = 1;
    long r = p, new_r = a % p;
    while (new_r != 0) {
        long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw Error(ErrorCode::InvalidArgument, "element is not invertible");
    return reduce_mod(t, p);
}

std::uint32_t reduce_mod(long value, std::uint32_t m) {
    long r = value % static_cast<long>(m);
    if (r < 0) r += m;
    return static_cast<std::uint32_t>(r);
}

void EchelonBasis::reduce(ModVector& v, ModVector* label_coords) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::uint32_t coef = v[pivots_[r]];
        if (coef == 0) continue;
        kernels::axpy_mod(v, rows_[r], p_ - coef, p_);
        if (label_coords != nullptr && labels_[r] != kNoLabel) {
            auto& slot = (*label_coords)[labels_[r]];
            slot = (slot + coef) % p_;
        }
    }
}

std::optional<Index> EchelonBasis::insert(ModVector v, Index label) {
    if (v.size() != width_) throw Error(ErrorCode::InvalidArgument, "vector width mismatch");
    reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (it == v.end()) return std::nullopt;
    const Index pivot = static_cast<Index>(it - v.begin());
    kernels::scale_mod(v, inverse_mod(v[pivot], p_), p_);
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    labels_.push_back(label);
    return rows_.size() - 1;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<Index> rref(std::vector<ModVector>& rows, Index cols, std::uint32_t p) {
    std::vector<Index> pivots;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows.size(); ++c) {
        Index sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        kernels::scale_mod(rows[r], inverse_mod(rows[r][c], p), p);
        for (Index i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i][c] != 0) kernels::axpy_mod(rows[i], rows[r], p - rows[i][c], p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Index rank_mod(std::vector<ModVector> rows, Index cols, std::uint32_t p) {
    return rref(rows, cols, p).size();
}

std::vector<ModVector> nullspace_mod(std::vector<ModVector> rows, Index cols, std::uint32_t p) {
    auto pivots = rref(rows, cols, p);
    std::vector<bool> is_pivot(cols, false);
    for (Index c : pivots) is_pivot[c] = true;
    std::vector<ModVector> basis;
    for (Index f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        ModVector x(cols, 0);
        x[f] = 1;
        for (Index i = 0; i < pivots.size(); ++i) {
            x[pivots[i]] = (p - rows[i][f]) % p;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<ModVector> coboundary_rows(const DeltaComplex& complex, int k, std::uint32_t m) {
    std::vector<ModVector> rows;
    if (k < 0 || k >= complex.dim()) return rows;
    rows.reserve(complex.count(k + 1));
    for (Index s = 0; s < complex.count(k + 1); ++s) {
        ModVector row(complex.count(k), 0);
        for (int i = 0; i <= k + 1; ++i) {
            auto& slot = row[complex.face(k + 1, s, i)];
            slot = (slot + (i % 2 == 0 ? 1 : m - 1)) % m;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ModVector coboundary(const DeltaComplex& complex, int k, std::span<const std::uint32_t> cochain,
                     std::uint32_t m) {
    if (cochain.size() != complex.count(k)) {
        throw Error(ErrorCode::InvalidArgument, "cochain size does not match the complex");
    }
    ModVector out(complex.count(k + 1), 0);
    for (Index s = 0; s < out.size(); ++s) {
        std::uint64_t acc = 0;
        for (int i = 0; i <= k + 1; ++i) {
            std::uint32_t v = cochain[complex.face(k + 1, s, i)];
            acc += (i % 2 == 0) ? v : (m - v) % m;
        }
        out[s] = static_cast<std::uint32_t>(acc % m);
    }
    return out;
}

}  // namespace lscat
