#pragma once

// Bounded verification of congruence claims against p_{j,k}(n) computed in
// Z/MZ, with a per-(spec, modulus) series cache.

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qseries/claims.hpp"
#include "qseries/series.hpp"

namespace qseries {

enum class Verdict { pass, fail, skipped };

std::string to_string(Verdict v);

struct VerificationReport {
    std::string id;
    ParamTuple params;
    std::string argument;  // "16n+6" once the parameters are fixed
    std::size_t n_max = 0;
    Verdict verdict = Verdict::skipped;
    std::optional<std::size_t> counterexample_n;  // smallest failing n
    std::optional<std::uint64_t> lhs;             // p_{j,k}(U n + V) mod M at that n
    std::optional<std::uint64_t> rhs;
    std::string reason;  // why a check was skipped
    double elapsed_ms = 0;
};

struct HarnessConfig {
    // Largest series order the harness will compute.
    std::size_t budget = 200000;
    // A family tuple whose in-budget window is shorter than this is skipped.
    std::size_t min_window = 10;
};

// Window used when a sweep does not name one.
constexpr std::size_t kDefaultNMax = 300;

// The claim's own n_max when it declares one, else kDefaultNMax.
inline std::size_t default_n_max(const CongruenceClaim& claim) { return claim.n_max.value_or(kDefaultNMax); }

// Legendre symbol by Euler's criterion. Throws std::invalid_argument unless p
// is an odd prime.
int legendre(long a, long p);

// U * n_max + V for the claim's argument under params.
Integer required_order(const CongruenceClaim& claim, const ParamTuple& params, std::size_t n_max);

class Harness {
public:
    explicit Harness(HarnessConfig config = {});

    const HarnessConfig& config() const noexcept { return config_; }

    // Checks n = 0..n_max. Parameters outside the claim's domain throw
    // std::invalid_argument; a required order above the budget is reported
    // as skipped.
    VerificationReport check_claim(const CongruenceClaim& claim, const ParamTuple& params, std::size_t n_max);

    // One report per tuple of enumerate_params(claim, bounds). Each tuple
    // uses min(n_max, (budget - V) / U) as its window.
    std::vector<VerificationReport> check_family(const CongruenceClaim& claim, std::size_t n_max,
                                                 const ParamBounds& bounds = {});

    // p_{j,k} mod M through at least the given order (cached).
    Series pjk_series(const RegularOverpartitionSpec& spec, std::uint64_t modulus, std::size_t order);

private:
    VerificationReport check_tuple(const CongruenceClaim& claim, const ParamTuple& params, std::size_t n_max,
                                   bool adaptive);

    HarnessConfig config_;
    std::mutex mutex_;
    std::map<std::pair<RegularOverpartitionSpec, std::uint64_t>, Series> cache_;
};

// Reference path for Zero claims: scans reduce_mod(series_pjk) directly and
// returns the smallest failing n, if any.
std::optional<std::size_t> direct_zero_scan(const CongruenceClaim& claim, const ParamTuple& params,
                                            std::size_t n_max);

}  // namespace qseries
