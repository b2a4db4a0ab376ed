#include <cstdlib>
#include <cstring>

#include "lscat/kernels.hpp"

namespace lscat::kernels {

bool avx2_supported() {
#if LSCAT_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported;
#else
    return false;
#endif
}

Isa active_isa() {
    static const Isa isa = [] {
        const char* force = std::getenv("LSCAT_FORCE_SCALAR");
        if (force != nullptr && std::strcmp(force, "0") != 0 && force[0] != '\0') {
            return Isa::Scalar;
        }
        return avx2_supported() ? Isa::Avx2 : Isa::Scalar;
    }();
    return isa;
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

namespace {
inline bool use_simd(std::uint32_t p) {
    return active_isa() == Isa::Avx2 && p <= kMaxSimdModulus;
}
}  // namespace

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p) {
#if LSCAT_HAVE_AVX2_KERNELS
    if (use_simd(p)) return avx2::axpy_mod(dst, src, c, p);
#endif
    scalar::axpy_mod(dst, src, c, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
#if LSCAT_HAVE_AVX2_KERNELS
    if (use_simd(p)) return avx2::scale_mod(dst, c, p);
#endif
    scalar::scale_mod(dst, c, p);
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p) {
#if LSCAT_HAVE_AVX2_KERNELS
    if (use_simd(p)) return avx2::dot_mod(a, b, p);
#endif
    return scalar::dot_mod(a, b, p);
}

}  // namespace lscat::kernels
