#include <gtest/gtest.h>

#include "qseries/identities.hpp"
#include "qseries/products.hpp"

namespace qseries {
namespace {

TEST(IdentityDatabase, EveryEntryHoldsAtItsDefaultOrder) {
    for (const IdentityEntry& e : IdentityDatabase::standard().entries()) {
        const IdentityResult r = verify_identity(e, e.default_order);
        EXPECT_TRUE(r.equal) << e.id << " first mismatch at q^" << r.first_mismatch.value_or(0);
    }
}

TEST(IdentityDatabase, LookupAndErrors) {
    const auto& db = IdentityDatabase::standard();
    EXPECT_TRUE(db.contains("two_diss_f1_inv2"));
    EXPECT_FALSE(db.contains("nope"));
    EXPECT_THROW(db.find("nope"), UnknownIdentity);
    EXPECT_THROW(verify_identity("nope", 10), UnknownIdentity);
    IdentityDatabase local;
    local.add({"x", "", [](std::size_t n) { return euler_f(1, n); }, [](std::size_t n) { return euler_f(1, n); },
               std::nullopt, 10});
    EXPECT_THROW(local.add({"x", "", nullptr, nullptr, std::nullopt, 10}), std::invalid_argument);
}

TEST(IdentityDatabase, DetectsAFalseIdentity) {
    IdentityEntry wrong{"wrong", "f1 = f2", [](std::size_t n) { return euler_f(1, n); },
                        [](std::size_t n) { return euler_f(2, n); }, std::nullopt, 20};
    const IdentityResult r = verify_identity(wrong, 20);
    EXPECT_FALSE(r.equal);
    EXPECT_EQ(r.first_mismatch, 1u);
}

TEST(PDissection, ExcludedAndAdmissibleIndices) {
    EXPECT_EQ(pdissection_excluded_index(5), -1);
    EXPECT_EQ(pdissection_excluded_index(7), 1);
    EXPECT_EQ(pdissection_excluded_index(11), -2);
    EXPECT_EQ(pdissection_excluded_index(13), 2);
    EXPECT_EQ(pdissection_admissible_indices(5), (std::vector<long>{-2, 0, 1, 2}));
    EXPECT_EQ(pdissection_admissible_indices(7), (std::vector<long>{-3, -2, -1, 0, 2, 3}));
    EXPECT_THROW(pdissection_excluded_index(9), std::invalid_argument);
    EXPECT_THROW(pdissection_excluded_index(3), std::invalid_argument);
}

TEST(PDissection, ReconstructsF1) {
    for (long p : {5L, 7L, 11L, 13L}) {
        const PDissectionResult r = verify_p_dissection(p, 300);
        EXPECT_TRUE(r.equal) << p;
        EXPECT_TRUE(r.residue_condition) << p;
    }
    for (long p : {17L, 19L}) EXPECT_TRUE(verify_p_dissection(p, 400).residue_condition) << p;
    EXPECT_THROW(verify_p_dissection(15, 10), std::invalid_argument);
}

TEST(TriangularSplit, Supports) {
    EXPECT_EQ(triangular_split_support(7, 100).support, (std::set<std::size_t>{0, 1, 3, 6}));
    EXPECT_EQ(triangular_split_support(11, 100).support, (std::set<std::size_t>{0, 1, 3, 4, 6, 10}));
    EXPECT_EQ(triangular_split_support(5, 100).support, (std::set<std::size_t>{0, 1, 3}));
}

TEST(TriangularSplit, ZeroOutsideSupport) {
    for (std::size_t p : {7u, 11u, 13u, 17u, 19u}) {
        const TriangularSplit s = triangular_split_support(p, 500);
        EXPECT_TRUE(s.zero_outside_support) << p;
        EXPECT_TRUE(s.divisible_class_ok) << p;
        ASSERT_TRUE(s.divisible_class.has_value());
        // 2n+1 = 0 (mod p) at n = (p-1)/2, i.e. the class (p^2-1)/8 mod p.
        EXPECT_EQ(*s.divisible_class, ((p * p - 1) / 8) % p);
        // The listed offsets 0,1,3,6,10,... land in the support.
        for (std::size_t n = 0; n < (p + 1) / 2; ++n) EXPECT_TRUE(s.support.contains(n * (n + 1) / 2 % p));
    }
}

TEST(Primes, IsPrime) {
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(91));
}

}  // namespace
}  // namespace qseries
