#include <gtest/gtest.h>

#include "qseries/products.hpp"

namespace qseries {
namespace {

// prod_{i>=1} (1 - q^{k i}) by repeated multiplication; no pentagonal shortcut.
Series naive_euler(std::size_t k, std::size_t order) {
    std::vector<Integer> c(order + 1);
    c[0] = 1;
    for (std::size_t m = k; m <= order; m += k) {
        for (std::size_t i = order; i >= m; --i) c[i] -= c[i - m];
    }
    return Series::from_integers(c);
}

// sum_{n in Z} sa^{n(n+1)/2} sb^{n(n-1)/2} q^{a n(n+1)/2 + b n(n-1)/2}, termwise.
Series naive_theta(long a, long b, int sa, int sb, std::size_t order) {
    std::vector<Integer> c(order + 1);
    for (long n = -200; n <= 200; ++n) {
        const long e = a * n * (n + 1) / 2 + b * n * (n - 1) / 2;
        if (e < 0 || e > static_cast<long>(order)) continue;
        long sign = 1;
        if (sa < 0 && ((n * (n + 1) / 2) % 2 != 0)) sign = -sign;
        if (sb < 0 && ((n * (n - 1) / 2) % 2 != 0)) sign = -sign;
        c[e] += sign;
    }
    return Series::from_integers(c);
}

TEST(EulerProduct, PentagonalExamples) {
    EXPECT_EQ(euler_f(1, 12), Series::from_integers({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
    EXPECT_EQ(euler_f(2, 5), Series::from_integers({1, 0, -1, 0, -1, 0}));
}

TEST(EulerProduct, MatchesDirectProduct) {
    for (std::size_t k : {1u, 2u, 3u, 5u, 8u}) EXPECT_EQ(euler_f(k, 400), naive_euler(k, 400)) << "k=" << k;
    EXPECT_THROW(euler_f(0, 10), std::invalid_argument);
}

TEST(Pochhammer, Examples) {
    EXPECT_EQ(pochhammer(4, 8, Sign::minus, 20),
              Series::from_integers({1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, -1}));
    EXPECT_EQ(pochhammer(1, 1, Sign::minus, 50), euler_f(1, 50));
    // (-q;q) = f2/f1
    EXPECT_EQ(pochhammer(1, 1, Sign::plus, 80), divide(euler_f(2, 80), euler_f(1, 80)));
    EXPECT_THROW(pochhammer(0, 1, Sign::plus, 5), std::invalid_argument);
}

TEST(Theta, NamedSpecialisations) {
    const std::size_t N = 150;
    EXPECT_EQ(theta(Phi{}, N), naive_theta(1, 1, 1, 1, N));
    EXPECT_EQ(theta(Psi{}, N), naive_theta(1, 3, 1, 1, N));
    EXPECT_EQ(theta(theta_minus(1, 2), N), euler_f(1, N));
    EXPECT_EQ(theta(GeneralTheta{3, 4, Sign::minus, Sign::minus}, N), naive_theta(3, 4, -1, -1, N));
    EXPECT_EQ(theta(GeneralTheta{2, 5, Sign::plus, Sign::minus}, N), naive_theta(2, 5, 1, -1, N));
}

TEST(Theta, PhiFirstTerms) {
    EXPECT_EQ(theta(Phi{}, 9), Series::from_integers({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
    EXPECT_EQ(theta(Psi{}, 10), Series::from_integers({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
}

TEST(Theta, RogersRamanujanQuotient) {
    const std::size_t N = 120;
    Series num = mul(pochhammer(2, 5, Sign::minus, N), pochhammer(3, 5, Sign::minus, N));
    Series den = mul(pochhammer(1, 5, Sign::minus, N), pochhammer(4, 5, Sign::minus, N));
    EXPECT_EQ(theta(RQuotient{}, N), divide(num, den));
}

TEST(Cubes, JacobiTriangularForm) {
    EXPECT_EQ(f1_cubed(300), pow(euler_f(1, 300), 3));
    EXPECT_EQ(f1_cubed(6), Series::from_integers({1, -3, 0, 5, 0, 0, -7}));
}

TEST(Cubes, PSeriesAgreesWithThetaProduct) { EXPECT_EQ(p_series(400), p_theta_product(400)); }

TEST(EtaQuotient, ParseAndPrint) {
    const EtaQuotient q = EtaQuotient::parse("f1^-2 * f2 * f4^2");
    EXPECT_EQ(q.exponent(1), -2);
    EXPECT_EQ(q.exponent(2), 1);
    EXPECT_EQ(q.exponent(4), 2);
    EXPECT_EQ(q.exponent(3), 0);
    EXPECT_EQ(q.to_string(), "f1^-2 * f2^1 * f4^2");
    EXPECT_EQ(EtaQuotient::parse(q.to_string()), q);
    EXPECT_EQ(EtaQuotient::parse("f1^(-2)*f2"), EtaQuotient::parse("f2*f1^-2"));
    EXPECT_TRUE(EtaQuotient::parse("1").empty());
    EXPECT_EQ(EtaQuotient::parse("f1*f1^-1").to_string(), "1");
}

TEST(EtaQuotient, ParseErrors) {
    for (const char* bad : {"", "f", "f0", "g1", "f1^", "f1^^2", "f1**f2", "f-1", "f1^x"}) {
        EXPECT_THROW(EtaQuotient::parse(bad), EtaParseError) << bad;
    }
}

TEST(EtaQuotient, AlgebraAndInflation) {
    const EtaQuotient a{{1, 2}, {3, -1}};
    const EtaQuotient b{{3, 1}, {4, 1}};
    EXPECT_EQ((a * b).to_string(), "f1^2 * f4^1");
    EXPECT_EQ(a.inflated(2).to_string(), "f2^2 * f6^-1");
    const std::size_t N = 100;
    EXPECT_EQ(eta_quotient_series(a * b, N), mul(eta_quotient_series(a, N), eta_quotient_series(b, N)));
    EXPECT_EQ(eta_quotient_series(a.inflated(3), N), inflate(eta_quotient_series(a, N), 3));
}

TEST(EtaQuotient, ModularEvaluationMatchesReduction) {
    const EtaQuotient q = EtaQuotient::parse("f2*f4^2*f16*f1^-2*f8^-3");
    for (std::uint64_t m : {2u, 4u, 8u, 16u, 32u, 64u}) {
        EXPECT_EQ(eta_quotient_series_mod(q, 500, m), reduce_mod(eta_quotient_series(q, 500), m)) << m;
    }
    EXPECT_EQ(eta_quotient_series_mod(q, 300, 12), reduce_mod(eta_quotient_series(q, 300), 12));
}

}  // namespace
}  // namespace qseries
