#include <gtest/gtest.h>

#include <set>

#include "qseries/claims.hpp"

namespace qseries {
namespace {

std::string one_claim(const std::string& body) { return R"({"claims": [)" + body + "]}"; }

TEST(Catalog, StandardLoads) {
    const auto& cat = ClaimCatalog::standard();
    EXPECT_GT(cat.claims().size(), 100u);
    std::set<std::string> core;
    for (const auto& c : cat.claims()) {
        if (c.core) core.insert(c.id);
        EXPECT_TRUE(c.modulus >= 2 && c.modulus <= 64 && (c.modulus & (c.modulus - 1)) == 0) << c.id;
        EXPECT_TRUE(c.group == "intermediate" || c.group == "theorem") << c.id;
    }
    EXPECT_EQ(core, (std::set<std::string>{"p14", "p15", "p17", "q5", "r3", "q13", "z5", "a15", "b9"}));
}

TEST(Catalog, BothReadingsOfDisputedStatementsArePresent) {
    const auto& cat = ClaimCatalog::standard();
    for (const char* id : {"t13a", "t13b", "t15a", "t15b", "t34", "t34lit", "t35", "t35lit", "t62a", "t62b", "t81a",
                           "t81b", "t11", "t11c"}) {
        EXPECT_TRUE(cat.contains(id)) << id;
    }
}

TEST(Catalog, ClaimFields) {
    const auto& t11 = ClaimCatalog::standard().find("t11");
    EXPECT_EQ(t11.spec, RegularOverpartitionSpec(4, 8));
    EXPECT_EQ(t11.modulus, 64u);
    ASSERT_TRUE(t11.rhs.has_value());
    EXPECT_EQ(t11.rhs->scalar, 32);
    EXPECT_EQ(t11.rhs->eta.to_string(), "f1^1 * f8^1");
    EXPECT_EQ(t11.statement(), "p_{4,8}(5^(2*alpha)*7^(2*beta)*(16*n+6)) = 32 * f1^1 * f8^1 (mod 64)");
    EXPECT_THROW(ClaimCatalog::standard().find("zz"), UnknownClaim);
}

TEST(Catalog, Select) {
    const auto& cat = ClaimCatalog::standard();
    EXPECT_EQ(cat.select("t13?").size(), 3u);
    EXPECT_EQ(cat.select("t13?c").size(), 2u);
    EXPECT_EQ(cat.select("t13*").size(), 7u);
    for (const auto* c : cat.select("*", "intermediate")) EXPECT_EQ(c->group, "intermediate");
    EXPECT_TRUE(glob_match("t1*", "t11c"));
    EXPECT_FALSE(glob_match("t1?", "t11c"));
    EXPECT_TRUE(glob_match("*", ""));
}

TEST(Catalog, EnumerateWithDependentRange) {
    const auto& t72 = ClaimCatalog::standard().find("t72b");
    const auto tuples = enumerate_params(t72);
    // p in {5,7,11,13}, alpha in {0,1}, j in 1..p-1
    EXPECT_EQ(tuples.size(), 2u * (4 + 6 + 10 + 12));
    EXPECT_EQ(to_string(tuples.front()), "p=5,alpha=0,j=1");
    const auto narrowed = enumerate_params(t72, ParamBounds{0, std::vector<long>{7}});
    EXPECT_EQ(narrowed.size(), 6u);
}

TEST(Catalog, RejectsMalformedRecords) {
    const char* good = R"({"id":"x","group":"theorem","spec":"4,8","modulus":8,"argument":"2*n+1","rhs":"0"})";
    EXPECT_NO_THROW(ClaimCatalog::from_json(one_claim(good)));
    const char* bad[] = {
        R"({"id":"x","group":"theorem","spec":"4,8","modulus":12,"argument":"2*n+1","rhs":"0"})",
        R"({"id":"x","group":"theorem","spec":"4,8","modulus":128,"argument":"2*n+1","rhs":"0"})",
        R"({"id":"x","group":"theorem","spec":"8,4","modulus":8,"argument":"2*n+1","rhs":"0"})",
        R"({"id":"x","group":"theorem","spec":"4,8","modulus":8,"argument":"2*n+","rhs":"0"})",
        R"({"id":"x","group":"theorem","spec":"4,8","modulus":8,"argument":"2*n+j","rhs":"0"})",
        R"({"id":"x","group":"theorem","spec":"4,8","modulus":8,"argument":"2*n+1","rhs":{"eta":"g1"}})",
        R"({"id":"x","group":"theorem","spec":"4,8","modulus":8,"argument":"2*n+1","rhs":"1"})",
        R"({"group":"theorem","spec":"4,8","modulus":8,"argument":"2*n+1","rhs":"0"})",
    };
    for (const char* b : bad) EXPECT_THROW(ClaimCatalog::from_json(one_claim(b)), CatalogError) << b;
    EXPECT_THROW(ClaimCatalog::from_json(one_claim(std::string(good) + "," + good)), CatalogError);
    EXPECT_THROW(ClaimCatalog::from_json("{"), CatalogError);
    EXPECT_THROW(ClaimCatalog::from_json("{}"), CatalogError);
}

}  // namespace
}  // namespace qseries
