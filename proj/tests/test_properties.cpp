#include <gtest/gtest.h>

#include <random>

#include "support/properties.hpp"

namespace {

const std::vector<props::Named>& corpus() {
    static const auto c = props::corpus();
    return c;
}

void expect_none(const std::vector<std::string>& failures) {
    for (const auto& f : failures) ADD_FAILURE() << f;
}

}  // namespace

TEST(Properties, CorpusSize) { EXPECT_EQ(corpus().size(), 8u + 36u); }

TEST(Properties, BoundarySquaresVanish) {
    for (const auto& x : corpus()) expect_none(props::boundary_squares(x));
}

TEST(Properties, CoboundarySquaresVanish) {
    std::mt19937 rng(1);
    for (const auto& x : corpus()) expect_none(props::coboundary_squares(x, rng));
}

TEST(Properties, LeibnizThousandTrialsEach) {
    std::mt19937 rng(2);
    for (const auto& x : corpus()) expect_none(props::leibniz(x, rng, 1000));
}

TEST(Properties, DualityAndEulerCharacteristic) {
    for (const auto& x : corpus()) expect_none(props::duality_and_euler(x));
}

TEST(Properties, UniversalCoefficients) {
    for (const auto& x : corpus()) expect_none(props::universal_coefficients(x));
}

TEST(Properties, AbelianizationIsH1) {
    for (const auto& x : corpus()) expect_none(props::abelianization_is_h1(x));
}
