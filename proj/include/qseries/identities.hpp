#pragma once

// Numerically checked q-series identities: 2- and 3-dissections, the cubic
// splitting of f_1^3, the 5- and 7-dissections of f_1, the p-dissection of
// f_1 and the binomial congruences f_k^{2^a m} = f_{2k}^{2^{a-1} m}.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

class UnknownIdentity : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

using SeriesRecipe = std::function<Series(std::size_t order)>;

struct IdentityEntry {
    std::string id;
    std::string statement;
    SeriesRecipe lhs;
    SeriesRecipe rhs;
    std::optional<std::uint64_t> modulus;  // exact equality when absent
    std::size_t default_order;
};

struct IdentityResult {
    std::string id;
    std::size_t order;
    bool equal;
    std::optional<std::size_t> first_mismatch;
};

class IdentityDatabase {
public:
    // The built-in catalogue, constructed once.
    static const IdentityDatabase& standard();

    std::span<const IdentityEntry> entries() const noexcept { return entries_; }
    const IdentityEntry& find(const std::string& id) const;
    bool contains(const std::string& id) const;

    void add(IdentityEntry entry);

private:
    std::vector<IdentityEntry> entries_;
};

IdentityResult verify_identity(const IdentityEntry& entry, std::size_t order);
IdentityResult verify_identity(const std::string& id, std::size_t order);

// Index k excluded from the p-dissection sum: (p-1)/6 if p = 1 (mod 6),
// (-p-1)/6 if p = -1 (mod 6).
long pdissection_excluded_index(long p);
// k in [-(p-1)/2, (p-1)/2] minus the excluded index.
std::vector<long> pdissection_admissible_indices(long p);
// The right-hand side of the p-dissection of f_1.
Series pdissection_rhs(long p, std::size_t order);

struct PDissectionResult {
    bool equal;
    std::optional<std::size_t> first_mismatch;
    // (3k^2+k)/2 differs from (p^2-1)/24 modulo p for every admissible k.
    bool residue_condition;
};

// Throws std::invalid_argument unless p is a prime >= 5.
PDissectionResult verify_p_dissection(long p, std::size_t order);

struct TriangularSplit {
    std::set<std::size_t> support;  // {n(n+1)/2 mod p}
    // extract_progression(f_1^3, p, r) is zero for every r outside support.
    bool zero_outside_support;
    // For the class r with 2n+1 = 0 (mod p), every extracted coefficient is
    // divisible by p.
    bool divisible_class_ok;
    std::optional<std::size_t> divisible_class;
};

TriangularSplit triangular_split_support(std::size_t p, std::size_t order);

bool is_prime(long n);

}  // namespace qseries
