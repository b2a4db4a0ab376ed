#pragma once

// Modular-arithmetic row kernels used by the Z/m linear algebra.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The active variant is chosen once at first use from the CPU's
// feature bits; setting LSCAT_FORCE_SCALAR=1 in the environment pins the
// scalar path. Both variants must produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace lscat::kernels {

enum class Isa { Scalar, Avx2 };

/// Largest modulus the SIMD variants accept; larger moduli fall back to scalar.
inline constexpr std::uint32_t kMaxSimdModulus = 4096;

Isa active_isa();
std::string_view isa_name(Isa isa);
bool avx2_supported();

// Preconditions for all kernels: entries already reduced into [0, p), p >= 2,
// and p < 2^16 so that products fit in 32 bits.

/// dst[i] = (dst[i] + c * src[i]) mod p
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);

/// dst[i] = (c * dst[i]) mod p
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);

/// sum_i a[i] * b[i] mod p
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define LSCAT_HAVE_AVX2_KERNELS 1
namespace avx2 {
// Only call when avx2_supported() is true and p <= kMaxSimdModulus.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p);
}  // namespace avx2
#else
#define LSCAT_HAVE_AVX2_KERNELS 0
#endif

}  // namespace lscat::kernels
