#include "qseries/harness.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "qseries/identities.hpp"
#include "qseries/partitions.hpp"
#include "qseries/products.hpp"

namespace qseries {

namespace {

void require_in_domain(const CongruenceClaim& claim, const ParamTuple& params) {
    for (const ParamDomain& d : claim.params) {
        auto it = std::find_if(params.begin(), params.end(), [&](const auto& kv) { return kv.first == d.name; });
        if (it == params.end()) {
            throw std::invalid_argument("claim '" + claim.id + "' needs a value for '" + d.name + "'");
        }
        if (d.range) {
            const Assignment env = to_assignment(params);
            const long lo = evaluate_expression(d.range->first, env);
            const long hi = evaluate_expression(d.range->second, env);
            if (it->second < lo || it->second > hi) {
                throw std::invalid_argument("claim '" + claim.id + "': " + d.name + "=" + std::to_string(it->second) +
                                            " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
            }
        } else if (std::find(d.values.begin(), d.values.end(), it->second) == d.values.end() &&
                   d.name != "alpha" && d.name != "beta" && d.name != "gamma" && d.name != "p") {
            // Exponents and primes may be swept beyond their default lists.
            throw std::invalid_argument("claim '" + claim.id + "': " + d.name + "=" + std::to_string(it->second) +
                                        " is not in its domain");
        }
    }
    for (const auto& [name, value] : params) {
        const bool known = std::any_of(claim.params.begin(), claim.params.end(),
                                       [&](const ParamDomain& d) { return d.name == name; });
        if (!known) throw std::invalid_argument("claim '" + claim.id + "' has no parameter '" + name + "'");
        if (value < 0 && (name == "alpha" || name == "beta" || name == "gamma")) {
            throw std::invalid_argument("claim '" + claim.id + "': " + name + " must be non-negative");
        }
    }
}

Series rhs_series(const RhsTerm& rhs, std::uint64_t modulus, std::size_t order) {
    Series s = eta_quotient_series_mod(rhs.eta, order, modulus);
    s = scale(s, Integer(rhs.scalar));
    return shift(s, rhs.shift);
}

std::size_t to_size(const Integer& v) {
    if (v < 0 || !v.fits_ulong_p()) throw std::overflow_error("value out of range: " + v.get_str());
    return static_cast<std::size_t>(v.get_ui());
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass:
            return "pass";
        case Verdict::fail:
            return "fail";
        case Verdict::skipped:
            return "skipped";
    }
    return "?";
}

int legendre(long a, long p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime, got " + std::to_string(p));
    Integer base = a % p;
    if (base < 0) base += p;
    if (base == 0) return 0;
    Integer r;
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), Integer(p).get_mpz_t());
    return r == 1 ? 1 : -1;
}

Integer required_order(const CongruenceClaim& claim, const ParamTuple& params, std::size_t n_max) {
    return claim.argument.affine(to_assignment(params))(Integer(static_cast<unsigned long>(n_max)));
}

Harness::Harness(HarnessConfig config) : config_(config) {}

Series Harness::pjk_series(const RegularOverpartitionSpec& spec, std::uint64_t modulus, std::size_t order) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(spec, modulus);
    auto it = cache_.find(key);
    if (it != cache_.end() && it->second.order() >= order) return it->second;
    // Grow geometrically so a sweep of increasing orders recomputes O(log) times.
    std::size_t target = order;
    if (it != cache_.end()) target = std::max(order, std::min(config_.budget, 2 * it->second.order()));
    Series s = series_pjk_mod(spec, target, modulus);
    cache_[key] = s;
    return s;
}

VerificationReport Harness::check_claim(const CongruenceClaim& claim, const ParamTuple& params, std::size_t n_max) {
    require_in_domain(claim, params);
    return check_tuple(claim, params, n_max, false);
}

VerificationReport Harness::check_tuple(const CongruenceClaim& claim, const ParamTuple& params, std::size_t n_max,
                                        bool adaptive) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.id = claim.id;
    r.params = params;
    r.n_max = n_max;
    auto finish = [&]() {
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return r;
    };

    if (claim.legendre) {
        const Assignment env = to_assignment(params);
        auto it = env.find(claim.legendre->param);
        if (it != env.end()) {
            const int symbol = legendre(claim.legendre->a, it->second);
            if (symbol != claim.legendre->value) {
                r.reason = "legendre(" + std::to_string(claim.legendre->a) + "," + std::to_string(it->second) +
                           ") = " + std::to_string(symbol);
                return finish();
            }
        }
    }

    AffineMap map;
    try {
        map = claim.argument.affine(to_assignment(params));
    } catch (const NonAffineArgument& e) {
        r.reason = "non-affine argument";
        return finish();
    }
    r.argument = map.to_string();

    const Integer budget(static_cast<unsigned long>(config_.budget));
    if (adaptive) {
        if (map.V > budget) {
            r.n_max = 0;
            r.reason = "budget: offset " + map.V.get_str() + " exceeds " + budget.get_str();
            return finish();
        }
        const Integer window = (budget - map.V) / map.U;
        if (window < Integer(static_cast<unsigned long>(config_.min_window))) {
            r.n_max = to_size(window);
            r.reason = "budget: only n <= " + window.get_str() + " fits in order " + budget.get_str();
            return finish();
        }
        r.n_max = std::min(n_max, to_size(window));
    }
    const Integer needed = map(Integer(static_cast<unsigned long>(r.n_max)));
    if (needed > budget) {
        r.reason = "budget: required order " + needed.get_str() + " exceeds " + budget.get_str();
        return finish();
    }

    const std::size_t U = to_size(map.U);
    const std::size_t V = to_size(map.V);
    const Series lhs = pjk_series(claim.spec, claim.modulus, to_size(needed));
    const std::span<const std::uint64_t> a = lhs.residues();
    std::optional<Series> rhs;
    if (claim.rhs) rhs = rhs_series(*claim.rhs, claim.modulus, r.n_max);

    r.verdict = Verdict::pass;
    for (std::size_t n = 0; n <= r.n_max; ++n) {
        const std::uint64_t left = a[U * n + V];
        const std::uint64_t right = rhs ? rhs->residues()[n] : 0;
        if (left != right) {
            r.verdict = Verdict::fail;
            r.counterexample_n = n;
            r.lhs = left;
            r.rhs = right;
            break;
        }
    }
    return finish();
}

std::vector<VerificationReport> Harness::check_family(const CongruenceClaim& claim, std::size_t n_max,
                                                      const ParamBounds& bounds) {
    std::vector<VerificationReport> out;
    for (const ParamTuple& params : enumerate_params(claim, bounds)) {
        out.push_back(check_tuple(claim, params, n_max, true));
    }
    return out;
}

std::optional<std::size_t> direct_zero_scan(const CongruenceClaim& claim, const ParamTuple& params,
                                            std::size_t n_max) {
    if (claim.rhs) throw std::invalid_argument("direct_zero_scan: claim '" + claim.id + "' has a non-zero rhs");
    const AffineMap map = claim.argument.affine(to_assignment(params));
    const std::size_t top = to_size(map(Integer(static_cast<unsigned long>(n_max))));
    const Series s = reduce_mod(series_pjk(claim.spec, top), claim.modulus);
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (!s.is_zero_at(to_size(map(Integer(static_cast<unsigned long>(n)))))) return n;
    }
    return std::nullopt;
}

}  // namespace qseries
