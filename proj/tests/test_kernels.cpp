#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "lscat/kernels.hpp"

namespace k = lscat::kernels;

namespace {

std::vector<std::uint32_t> random_vec(std::mt19937& rng, std::size_t n, std::uint32_t p) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

const std::uint32_t kModuli[] = {2, 3, 5, 7, 251, 1021, 4093, 4096};
const std::size_t kLengths[] = {0, 1, 7, 8, 9, 15, 16, 17, 31, 64, 100, 1000};

}  // namespace

TEST(Kernels, IsaNameMatchesActive) {
    const auto isa = k::active_isa();
    EXPECT_TRUE(isa == k::Isa::Scalar || isa == k::Isa::Avx2);
    EXPECT_FALSE(k::isa_name(isa).empty());
    if (!k::avx2_supported()) {
        EXPECT_EQ(isa, k::Isa::Scalar);
    }
}

TEST(Kernels, ScalarMatchesNaiveFormula) {
    std::mt19937 rng(7);
    for (auto p : kModuli) {
        for (auto n : kLengths) {
            auto a = random_vec(rng, n, p), b = random_vec(rng, n, p);
            const std::uint32_t c = p - 1;
            auto dst = a;
            k::scalar::axpy_mod(dst, b, c, p);
            std::uint64_t dot = 0;
            for (std::size_t i = 0; i < n; ++i) {
                EXPECT_EQ(dst[i], (a[i] + std::uint64_t{c} * b[i]) % p);
                dot += std::uint64_t{a[i]} * b[i];
            }
            EXPECT_EQ(k::scalar::dot_mod(a, b, p), dot % p);
        }
    }
}

#if LSCAT_HAVE_AVX2_KERNELS
TEST(Kernels, Avx2MatchesScalarBitForBit) {
    if (!k::avx2_supported()) GTEST_SKIP() << "CPU lacks AVX2";
    std::mt19937 rng(11);
    for (auto p : kModuli) {
        for (auto n : kLengths) {
            for (int trial = 0; trial < 20; ++trial) {
                auto a = random_vec(rng, n, p), b = random_vec(rng, n, p);
                const std::uint32_t c = std::uniform_int_distribution<std::uint32_t>(0, p - 1)(rng);
                auto s1 = a, s2 = a;
                k::scalar::axpy_mod(s1, b, c, p);
                k::avx2::axpy_mod(s2, b, c, p);
                ASSERT_EQ(s1, s2) << "axpy p=" << p << " n=" << n;
                s1 = a;
                s2 = a;
                k::scalar::scale_mod(s1, c, p);
                k::avx2::scale_mod(s2, c, p);
                ASSERT_EQ(s1, s2) << "scale p=" << p << " n=" << n;
                ASSERT_EQ(k::scalar::dot_mod(a, b, p), k::avx2::dot_mod(a, b, p)) << "dot p=" << p << " n=" << n;
            }
        }
    }
}

TEST(Kernels, Avx2HandlesExtremeEntries) {
    if (!k::avx2_supported()) GTEST_SKIP() << "CPU lacks AVX2";
    for (std::uint32_t p : {2u, 4093u, 4096u}) {
        std::vector<std::uint32_t> a(37, p - 1), b(37, p - 1), s1 = a, s2 = a;
        k::scalar::axpy_mod(s1, b, p - 1, p);
        k::avx2::axpy_mod(s2, b, p - 1, p);
        EXPECT_EQ(s1, s2);
        EXPECT_EQ(k::scalar::dot_mod(a, b, p), k::avx2::dot_mod(a, b, p));
    }
}
#endif

TEST(Kernels, DispatchAgreesWithScalarBeyondSimdRange) {
    std::mt19937 rng(3);
    for (std::uint32_t p : {5u, 4099u, 65521u}) {
        auto a = random_vec(rng, 123, p), b = random_vec(rng, 123, p);
        auto s1 = a, s2 = a;
        k::scalar::axpy_mod(s1, b, 3, p);
        k::axpy_mod(s2, b, 3, p);
        EXPECT_EQ(s1, s2);
        EXPECT_EQ(k::scalar::dot_mod(a, b, p), k::dot_mod(a, b, p));
    }
}
