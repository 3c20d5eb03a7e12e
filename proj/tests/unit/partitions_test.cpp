#include <gtest/gtest.h>

#include "qseries/partitions.hpp"

namespace qseries {
namespace {

// Reference values from tools/derive_oracle_values.py (independent
// factor-by-factor product expansion).
const std::vector<long> kP48 = {1,   2,   4,   8,   12,  20,   32,   48,   74,   110, 160,
                                232, 328, 460, 640, 880, 1204, 1632, 2196, 2936, 3896};
const std::vector<long> kP612 = {1,   2,   4,   8,   14,  24,   38,   60,   92,   138, 204,
                                 296, 426, 604, 848, 1180, 1626, 2224, 3016, 4064, 5440};
const std::vector<long> kP816 = {1,   2,   4,   8,   14,  24,   40,   64,   98,   150, 224,
                                 328, 476, 680, 960, 1344, 1864, 2560, 3492, 4728, 6356};

TEST(Spec, ParseAndValidate) {
    const auto s = RegularOverpartitionSpec::parse(" 4, 8");
    EXPECT_EQ(s, RegularOverpartitionSpec(4, 8));
    EXPECT_EQ(s.to_string(), "4,8");
    EXPECT_THROW(RegularOverpartitionSpec(0, 4), std::invalid_argument);
    EXPECT_THROW(RegularOverpartitionSpec(4, 4), std::invalid_argument);
    EXPECT_THROW(RegularOverpartitionSpec::parse("48"), std::invalid_argument);
    EXPECT_THROW(RegularOverpartitionSpec::parse("4,x"), std::invalid_argument);
}

TEST(Spec, EtaFormOnlyWhenKIsTwiceJ) {
    EXPECT_EQ(pjk_eta_quotient({4, 8})->to_string(), "f1^-2 * f2^1 * f4^2 * f8^-3 * f16^1");
    EXPECT_FALSE(pjk_eta_quotient({3, 5}).has_value());
}

TEST(GeneratingFunction, FrozenInitialValues) {
    const Series a = series_pjk({4, 8}, 20);
    const Series b = series_pjk({6, 12}, 20);
    const Series c = series_pjk({8, 16}, 20);
    for (std::size_t n = 0; n <= 20; ++n) {
        EXPECT_EQ(a.coefficient(n), kP48[n]) << n;
        EXPECT_EQ(b.coefficient(n), kP612[n]) << n;
        EXPECT_EQ(c.coefficient(n), kP816[n]) << n;
    }
}

TEST(GeneratingFunction, ClassicalAnchors) {
    EXPECT_EQ(series_overpartition(4).coefficient(4), 14);
    EXPECT_EQ(series_pjk({4, 8}, 4).coefficient(4), 12);
    EXPECT_EQ(series_partition(10), Series::from_integers({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
    EXPECT_EQ(series_ell_regular(2, 6), Series::from_integers({1, 1, 1, 2, 2, 3, 4}));
}

TEST(Enumeration, SmallCases) {
    EXPECT_EQ(enumerate_partition(5), 7);
    EXPECT_EQ(enumerate_ell_regular(2, 5), 3);
    EXPECT_EQ(enumerate_overpartition(4), 14);
    EXPECT_EQ(enumerate_pjk({4, 8}, 4), 12);
    EXPECT_EQ(enumerate_partition(0), 1);
    EXPECT_THROW(enumerate_ell_regular(0, 3), std::invalid_argument);
}

TEST(Enumeration, MatchesGeneratingFunctions) {
    const std::size_t N = 60;
    for (auto spec : {RegularOverpartitionSpec{4, 8}, RegularOverpartitionSpec{6, 12},
                      RegularOverpartitionSpec{8, 16}, RegularOverpartitionSpec{3, 5}}) {
        const Series s = series_pjk(spec, N);
        for (std::size_t n = 0; n <= N; ++n) {
            ASSERT_EQ(s.coefficient(n), enumerate_pjk(spec, n)) << spec.to_string() << " n=" << n;
        }
    }
    const Series p = series_partition(N);
    const Series o = series_overpartition(N);
    const Series r = series_ell_regular(3, N);
    for (std::size_t n = 0; n <= N; ++n) {
        ASSERT_EQ(p.coefficient(n), enumerate_partition(n));
        ASSERT_EQ(o.coefficient(n), enumerate_overpartition(n));
        ASSERT_EQ(r.coefficient(n), enumerate_ell_regular(3, n));
    }
}

TEST(GeneratingFunction, ModularPathAgreesWithExact) {
    for (auto spec : {RegularOverpartitionSpec{4, 8}, RegularOverpartitionSpec{3, 5}}) {
        for (std::uint64_t m : {2u, 16u, 64u}) {
            EXPECT_EQ(series_pjk_mod(spec, 400, m), reduce_mod(series_pjk(spec, 400), m));
        }
    }
}

}  // namespace
}  // namespace qseries
