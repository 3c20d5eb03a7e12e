#pragma once

// Congruence claims: p_{j,k}(U n + V) = [q^n] scalar * q^shift * eta (mod M),
// or = 0 (mod M), for every parameter tuple in a declared domain.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qseries/argument_map.hpp"
#include "qseries/partitions.hpp"
#include "qseries/products.hpp"

namespace qseries {

class CatalogError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownClaim : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

struct RhsTerm {
    long scalar = 1;
    std::size_t shift = 0;
    EtaQuotient eta;

    std::string to_string() const;
};

// A parameter ranges over an explicit list or an inclusive range whose
// bounds may refer to earlier parameters ("1" .. "p-1").
struct ParamDomain {
    std::string name;
    std::vector<long> values;
    std::optional<std::pair<std::string, std::string>> range;
};

// Keeps tuples whose Legendre symbol (a / param) equals value.
struct LegendreFilter {
    std::string param = "p";
    long a = 0;
    int value = 0;
};

// Declaration-ordered parameter values.
using ParamTuple = std::vector<std::pair<std::string, long>>;

Assignment to_assignment(const ParamTuple& tuple);
std::string to_string(const ParamTuple& tuple);

struct CongruenceClaim {
    std::string id;
    std::string group;
    bool core = false;
    RegularOverpartitionSpec spec{1, 2};
    std::uint64_t modulus = 2;
    ArgumentMap argument;
    std::optional<RhsTerm> rhs;  // zero when absent
    std::vector<ParamDomain> params;
    std::optional<LegendreFilter> legendre;
    std::optional<std::size_t> n_max;
    std::string note;

    // "p_{4,8}(16n+6) = 32 * f1^1 * f8^1 (mod 64)"
    std::string statement() const;
};

// Overrides applied to a family sweep.
struct ParamBounds {
    // alpha, beta, gamma range over 0..max_exponent.
    std::optional<long> max_exponent;
    // Replaces the domain of p.
    std::optional<std::vector<long>> primes;
};

// Cartesian product of the claim's parameter domains, in declaration order.
std::vector<ParamTuple> enumerate_params(const CongruenceClaim& claim, const ParamBounds& bounds = {});

class ClaimCatalog {
public:
    // The catalogue shipped in data/claims.json.
    static const ClaimCatalog& standard();
    // Throws CatalogError on malformed records.
    static ClaimCatalog from_json(const std::string& text);

    std::span<const CongruenceClaim> claims() const noexcept { return claims_; }
    const CongruenceClaim& find(const std::string& id) const;
    bool contains(const std::string& id) const;
    void add(CongruenceClaim claim);

    // Claims whose id matches the glob (* and ?) and, when given, the group.
    std::vector<const CongruenceClaim*> select(const std::string& glob, const std::string& group = "") const;

private:
    std::vector<CongruenceClaim> claims_;
};

bool glob_match(const std::string& pattern, const std::string& text);

// The raw embedded catalogue text.
const std::string& embedded_catalog_json();

}  // namespace qseries
