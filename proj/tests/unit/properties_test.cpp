#include <gtest/gtest.h>

#include <random>

#include "qseries/products.hpp"
#include "qseries/series.hpp"

namespace qseries {
namespace {

constexpr int kTrials = 40;

Series random_series(std::mt19937_64& rng, std::size_t order, bool unit = false) {
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::vector<Integer> c(order + 1);
    for (auto& x : c) x = coeff(rng);
    if (unit) c[0] = (rng() & 1) ? 1 : -1;
    return Series::from_integers(std::move(c));
}

Series random_eta_series(std::mt19937_64& rng, std::size_t order, std::uint64_t modulus = 0) {
    std::uniform_int_distribution<int> k(1, 8);
    std::uniform_int_distribution<int> e(-3, 3);
    EtaQuotient q;
    for (int i = 0; i < 3; ++i) q = q * EtaQuotient{{static_cast<std::size_t>(k(rng)), e(rng)}};
    return modulus ? eta_quotient_series_mod(q, order, modulus) : eta_quotient_series(q, order);
}

class Properties : public ::testing::Test {
protected:
    std::mt19937_64 rng{20240611};
};

TEST_F(Properties, RingAxioms) {
    for (int t = 0; t < kTrials; ++t) {
        const std::size_t N = 5 + rng() % 40;
        const Series a = random_series(rng, N), b = random_series(rng, N), c = random_series(rng, N);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Series::zero(Ring::exact(), N));
        EXPECT_EQ(a * Series::one(Ring::exact(), N), a);
    }
}

TEST_F(Properties, InverseRoundTrip) {
    for (int t = 0; t < kTrials; ++t) {
        const std::size_t N = 5 + rng() % 60;
        const Series a = random_series(rng, N, true);
        EXPECT_EQ(a * inverse(a), Series::one(Ring::exact(), N));
        const Series b = random_series(rng, N);
        EXPECT_EQ(divide(b, a) * a, b);
        const Series m = reduce_mod(a, 64);
        EXPECT_EQ(m * inverse(m), Series::one(Ring::integers_mod(64), N));
    }
}

TEST_F(Properties, DissectionIsComplete) {
    for (int t = 0; t < kTrials; ++t) {
        const std::size_t N = 20 + rng() % 100;
        const std::size_t m = 2 + rng() % 6;
        const Series a = random_eta_series(rng, N);
        std::vector<Integer> c(N + 1);
        for (std::size_t r = 0; r < m; ++r) {
            const Series part = extract_progression(a, m, r);
            for (std::size_t i = 0; m * i + r <= N; ++i) c[m * i + r] += part.coefficient(i);
        }
        const Series sum = Series::from_integers(std::move(c));
        EXPECT_EQ(sum, a) << "m=" << m;
    }
}

TEST_F(Properties, InflateIsAHomomorphism) {
    for (int t = 0; t < kTrials; ++t) {
        const std::size_t N = 5 + rng() % 30;
        const std::size_t k = 1 + rng() % 5;
        const Series a = random_series(rng, N), b = random_series(rng, N);
        EXPECT_EQ(inflate(a * b, k), inflate(a, k) * inflate(b, k));
        EXPECT_EQ(inflate(a + b, k), inflate(a, k) + inflate(b, k));
    }
}

TEST_F(Properties, ReductionIsAHomomorphism) {
    for (int t = 0; t < kTrials; ++t) {
        const std::size_t N = 5 + rng() % 40;
        const std::uint64_t M = std::uint64_t{1} << (1 + rng() % 6);
        const Series a = random_series(rng, N), b = random_series(rng, N, true);
        EXPECT_EQ(reduce_mod(a * b, M), reduce_mod(a, M) * reduce_mod(b, M));
        EXPECT_EQ(reduce_mod(a + b, M), reduce_mod(a, M) + reduce_mod(b, M));
        EXPECT_EQ(reduce_mod(divide(a, b), M), divide(reduce_mod(a, M), reduce_mod(b, M)));
    }
}

TEST_F(Properties, TruncationIsMonotone) {
    for (int t = 0; t < 10; ++t) {
        std::uniform_int_distribution<int> k(1, 6);
        std::uniform_int_distribution<int> e(-3, 3);
        const EtaQuotient q{{static_cast<std::size_t>(k(rng)), e(rng)}, {static_cast<std::size_t>(k(rng)), e(rng)}};
        const std::size_t N = 50 + rng() % 200;
        const std::size_t M = N + 1 + rng() % 200;
        EXPECT_EQ(eta_quotient_series(q, M).truncated(N), eta_quotient_series(q, N));
        EXPECT_EQ(eta_quotient_series_mod(q, M, 32).truncated(N), eta_quotient_series_mod(q, N, 32));
    }
}

TEST_F(Properties, TextRoundTrip) {
    for (int t = 0; t < kTrials; ++t) {
        const Series a = random_series(rng, rng() % 30);
        EXPECT_EQ(parse_series(to_text(a)), a);
        const Series m = reduce_mod(a, 1 + rng() % 1000 + 1);
        EXPECT_EQ(parse_series(to_text(m)), m);
    }
}

TEST_F(Properties, ThetaIsSymmetric) {
    for (int t = 0; t < 20; ++t) {
        const std::size_t a = 1 + rng() % 7;
        const std::size_t b = 1 + rng() % 7;
        EXPECT_EQ(theta(GeneralTheta{a, b, Sign::plus, Sign::plus}, 200),
                  theta(GeneralTheta{b, a, Sign::plus, Sign::plus}, 200));
        EXPECT_EQ(theta(GeneralTheta{a, b, Sign::minus, Sign::minus}, 200),
                  theta(GeneralTheta{b, a, Sign::minus, Sign::minus}, 200));
    }
}

TEST_F(Properties, PhiSquaredCoefficientsDivisibleByFour) {
    const std::size_t N = 500;
    const Series phi = theta(Phi{}, N);
    const Series sq = phi * phi;
    for (std::size_t n = 1; n <= N; ++n) EXPECT_EQ(sq.coefficient(n) % 4, 0) << n;
}

}  // namespace
}  // namespace qseries
