#include "lscat/kernels.hpp"

#include <cassert>

namespace lscat::kernels::scalar {

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p) {
    assert(dst.size() == src.size());
    if (c == 0) return;
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = (dst[i] + c * src[i]) % p;
    }
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
    for (auto& v : dst) v = (c * v) % p;
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p) {
    assert(a.size() == b.size());
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += static_cast<std::uint64_t>(a[i]) * b[i];
    }
    return static_cast<std::uint32_t>(acc % p);
}

}  // namespace lscat::kernels::scalar
