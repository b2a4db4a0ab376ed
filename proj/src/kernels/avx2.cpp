// Compiled with -mavx2; never called unless the CPU reports AVX2.

#include "lscat/kernels.hpp"

#if LSCAT_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cassert>

namespace lscat::kernels::avx2 {

namespace {

// x < p*p < 2^24, so x is exact in float and the float quotient is off by at
// most one; the two compare-and-fix steps land r in [0, p).
inline __m256i reduce_lanes(__m256i x, __m256 inv_p, __m256i p_vec) {
    __m256 xf = _mm256_cvtepi32_ps(x);
    __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(xf, inv_p));
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, p_vec));
    __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
    r = _mm256_add_epi32(r, _mm256_and_si256(neg, p_vec));
    __m256i over = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(p_vec, _mm256_set1_epi32(1)));
    r = _mm256_sub_epi32(r, _mm256_and_si256(over, p_vec));
    return r;
}

}  // namespace

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p) {
    assert(dst.size() == src.size());
    assert(p <= kMaxSimdModulus);
    if (c == 0) return;
    const std::size_t n = dst.size();
    const __m256i c_vec = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i p_vec = _mm256_set1_epi32(static_cast<int>(p));
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
        __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, c_vec));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i),
                            reduce_lanes(x, inv_p, p_vec));
    }
    for (; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
    assert(p <= kMaxSimdModulus);
    const std::size_t n = dst.size();
    const __m256i c_vec = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i p_vec = _mm256_set1_epi32(static_cast<int>(p));
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
        __m256i x = _mm256_mullo_epi32(d, c_vec);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i),
                            reduce_lanes(x, inv_p, p_vec));
    }
    for (; i < n; ++i) dst[i] = (c * dst[i]) % p;
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p) {
    assert(a.size() == b.size());
    assert(p <= kMaxSimdModulus);
    const std::size_t n = a.size();
    // Products are < 2^24; widen even and odd lanes into 64-bit accumulators.
    __m256i acc_even = _mm256_setzero_si256();
    __m256i acc_odd = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
        acc_even = _mm256_add_epi64(acc_even, _mm256_mul_epu32(x, y));
        acc_odd = _mm256_add_epi64(acc_odd, _mm256_mul_epu32(_mm256_srli_epi64(x, 32),
                                                             _mm256_srli_epi64(y, 32)));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_add_epi64(acc_even, acc_odd));
    std::uint64_t acc = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) acc += static_cast<std::uint64_t>(a[i]) * b[i];
    return static_cast<std::uint32_t>(acc % p);
}

}  // namespace lscat::kernels::avx2

#endif
