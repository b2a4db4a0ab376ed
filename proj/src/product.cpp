#include <map>
#include <tuple>

#include "lscat/delta_complex.hpp"
#include "lscat/error.hpp"

namespace lscat {

namespace {

using Steps = std::vector<std::uint8_t>;
using CellKey = std::tuple<int, Index, int, Index, Steps>;

constexpr std::uint8_t kA = 1;
constexpr std::uint8_t kB = 2;

// All step sequences with `ones` A-steps, `twos` B-steps and `threes` diagonal
// steps, in lexicographic order.
void step_sequences(int ones, int twos, int threes, Steps& prefix, std::vector<Steps>& out) {
    if (ones == 0 && twos == 0 && threes == 0) {
        out.push_back(prefix);
        return;
    }
    const int left[3] = {ones, twos, threes};
    for (std::uint8_t code = 1; code <= 3; ++code) {
        if (left[code - 1] == 0) continue;
        prefix.push_back(code);
        step_sequences(ones - (code == 1), twos - (code == 2), threes - (code == 3), prefix, out);
        prefix.pop_back();
    }
}

Index multinomial(int a, int b, int c) {
    Index r = 1;
    int n = 0;
    for (int part : {a, b, c}) {
        for (int i = 1; i <= part; ++i) {
            ++n;
            r = r * n / i;
        }
    }
    return r;
}

ProductCell cell_face(const DeltaComplex& a, const DeltaComplex& b, const ProductCell& cell, int t) {
    const int k = static_cast<int>(cell.steps.size());
    ProductCell f{cell.a_dim, cell.a, cell.b_dim, cell.b, {}};
    auto drop_a = [&](int i) { f.a = a.face(f.a_dim, f.a, i); --f.a_dim; };
    auto drop_b = [&](int j) { f.b = b.face(f.b_dim, f.b, j); --f.b_dim; };
    if (t == 0) {
        const std::uint8_t s = cell.steps.front();
        if (s & kA) drop_a(0);
        if (s & kB) drop_b(0);
        f.steps.assign(cell.steps.begin() + 1, cell.steps.end());
        return f;
    }
    if (t == k) {
        const std::uint8_t s = cell.steps.back();
        if (s & kA) drop_a(cell.a_dim);
        if (s & kB) drop_b(cell.b_dim);
        f.steps.assign(cell.steps.begin(), cell.steps.end() - 1);
        return f;
    }
    int i = 0, j = 0;
    for (int u = 0; u < t; ++u) {
        i += (cell.steps[u] & kA) ? 1 : 0;
        j += (cell.steps[u] & kB) ? 1 : 0;
    }
    const std::uint8_t s1 = cell.steps[t - 1], s2 = cell.steps[t];
    const bool both_a = (s1 & kA) && (s2 & kA);
    const bool both_b = (s1 & kB) && (s2 & kB);
    if (both_a) drop_a(i);
    if (both_b) drop_b(j);
    f.steps.assign(cell.steps.begin(), cell.steps.begin() + (t - 1));
    f.steps.push_back(static_cast<std::uint8_t>(s1 | s2));
    f.steps.insert(f.steps.end(), cell.steps.begin() + t + 1, cell.steps.end());
    return f;
}

}  // namespace

Index shuffle_count(const DeltaComplex& a, const DeltaComplex& b, int k) {
    Index total = 0;
    for (int p = 0; p <= a.dim(); ++p) {
        for (int q = 0; q <= b.dim(); ++q) {
            if (k < std::max(p, q) || k > p + q) continue;
            total += a.count(p) * b.count(q) * multinomial(k - q, k - p, p + q - k);
        }
    }
    return total;
}

ProductComplex product_with_cells(const DeltaComplex& a, const DeltaComplex& b) {
    const int n = a.dim() + b.dim();
    if (n > 4) {
        throw Error(ErrorCode::DimensionOverflow,
                    "product dimension " + std::to_string(n) + " exceeds 4");
    }
    ProductComplex out;
    out.cells.resize(static_cast<std::size_t>(n + 1));
    std::vector<std::map<CellKey, Index>> lookup(static_cast<std::size_t>(n + 1));
    std::vector<std::vector<std::vector<Index>>> faces(static_cast<std::size_t>(n));

    for (int k = 0; k <= n; ++k) {
        for (int p = 0; p <= a.dim(); ++p) {
            for (int q = 0; q <= b.dim(); ++q) {
                if (k < std::max(p, q) || k > p + q) continue;
                std::vector<Steps> seqs;
                Steps prefix;
                step_sequences(k - q, k - p, p + q - k, prefix, seqs);
                for (Index x = 0; x < a.count(p); ++x) {
                    for (Index y = 0; y < b.count(q); ++y) {
                        for (const auto& st : seqs) {
                            ProductCell cell{p, x, q, y, st};
                            lookup[k].emplace(CellKey{p, x, q, y, st}, out.cells[k].size());
                            out.cells[k].push_back(std::move(cell));
                        }
                    }
                }
            }
        }
        if (k == 0) continue;
        auto& table = faces[k - 1];
        table.reserve(out.cells[k].size());
        for (const auto& cell : out.cells[k]) {
            std::vector<Index> fs;
            fs.reserve(k + 1);
            for (int t = 0; t <= k; ++t) {
                ProductCell f = cell_face(a, b, cell, t);
                fs.push_back(lookup[k - 1].at(CellKey{f.a_dim, f.a, f.b_dim, f.b, f.steps}));
            }
            table.push_back(std::move(fs));
        }
    }
    out.complex = DeltaComplex(out.cells[0].size(), std::move(faces));
    return out;
}

DeltaComplex product(const DeltaComplex& a, const DeltaComplex& b) {
    return product_with_cells(a, b).complex;
}

std::vector<std::uint32_t> ProductComplex::pullback_first(int k, std::span<const std::uint32_t> cochain) const {
    std::vector<std::uint32_t> out(cells[k].size(), 0);
    for (Index s = 0; s < cells[k].size(); ++s) {
        const auto& c = cells[k][s];
        if (c.a_dim == k) out[s] = cochain[c.a];
    }
    return out;
}

std::vector<std::uint32_t> ProductComplex::pullback_second(int k, std::span<const std::uint32_t> cochain) const {
    std::vector<std::uint32_t> out(cells[k].size(), 0);
    for (Index s = 0; s < cells[k].size(); ++s) {
        const auto& c = cells[k][s];
        if (c.b_dim == k) out[s] = cochain[c.b];
    }
    return out;
}

}  // namespace lscat
