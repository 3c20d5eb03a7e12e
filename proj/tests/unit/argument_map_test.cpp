#include <gtest/gtest.h>

#include "qseries/argument_map.hpp"

namespace qseries {
namespace {

TEST(ArgumentMap, AffineEvaluation) {
    const auto m = ArgumentMap::parse("5^(2*alpha+1)*7^(2*beta)*(16*(5*n+j)+14)");
    EXPECT_EQ(m.parameters(), (std::set<std::string>{"alpha", "beta", "j"}));
    const AffineMap a = m.affine({{"alpha", 0}, {"beta", 0}, {"j", 2}});
    EXPECT_EQ(a.U, 400);
    EXPECT_EQ(a.V, 5 * (32 + 14));
    EXPECT_EQ(a.to_string(), "400n+230");
    EXPECT_EQ(m.evaluate({{"alpha", 1}, {"beta", 0}, {"j", 0}}, 3), 125 * (16 * 15 + 14));
}

TEST(ArgumentMap, PrecedenceAndUnary) {
    EXPECT_EQ(evaluate_expression("2+3*4", {}), 14);
    EXPECT_EQ(evaluate_expression("2^3^2", {}), 512);
    EXPECT_EQ(evaluate_expression("-2^2", {}), -4);
    EXPECT_EQ(evaluate_expression("(1-2)*-3", {}), 3);
    EXPECT_EQ(evaluate_expression("p-1", {{"p", 13}}), 12);
    EXPECT_EQ(evaluate_expression("8*(2*p^(2*alpha)-1)", {{"p", 5}, {"alpha", 1}}), 392);
}

TEST(ArgumentMap, LargeValuesStayExact) {
    const auto m = ArgumentMap::parse("16*3^(4*alpha)*5^(4*beta)*7^(4*gamma)*n");
    const AffineMap a = m.affine({{"alpha", 3}, {"beta", 3}, {"gamma", 3}});
    EXPECT_EQ(a.U, Integer("16") * Integer("531441") * Integer("244140625") * Integer("13841287201"));
}

TEST(ArgumentMap, NonAffineDetected) {
    const auto m = ArgumentMap::parse("16*(17*n+w)*n+2");
    EXPECT_THROW(m.affine({{"w", 2}}), NonAffineArgument);
    EXPECT_EQ(m.polynomial({{"w", 2}}).size(), 3u);
}

TEST(ArgumentMap, RejectsDecreasingOrNegative) {
    EXPECT_THROW(ArgumentMap::parse("5-n").affine({}), std::domain_error);
    EXPECT_THROW(ArgumentMap::parse("7").affine({}), std::domain_error);
    EXPECT_THROW(ArgumentMap::parse("2*n-1").affine({}), std::domain_error);
}

TEST(ArgumentMap, Errors) {
    for (const char* bad : {"", "2*", "(n+1", "n+)", "2 3", "n$1"}) {
        EXPECT_THROW(ArgumentMap::parse(bad), ArgumentParseError) << bad;
    }
    EXPECT_THROW(ArgumentMap::parse("2^n").affine({}), ArgumentParseError);
    EXPECT_THROW(ArgumentMap::parse("2^(0-1)*n").affine({}), std::domain_error);
    EXPECT_THROW(ArgumentMap::parse("p*n").affine({}), std::invalid_argument);
    EXPECT_THROW(evaluate_expression("n+1", {}), ArgumentParseError);
}

}  // namespace
}  // namespace qseries
