#include "qseries/partitions.hpp"

#include <charconv>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qseries {

RegularOverpartitionSpec::RegularOverpartitionSpec(std::size_t j_, std::size_t k_) : j(j_), k(k_) {
    if (j == 0 || j >= k) {
        throw std::invalid_argument("regular overpartition spec requires 1 <= j < k, got (" + std::to_string(j) +
                                    "," + std::to_string(k) + ")");
    }
}

RegularOverpartitionSpec RegularOverpartitionSpec::parse(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("spec must look like 'j,k', got '" + text + "'");
    auto number = [&](std::string_view v) {
        std::size_t out = 0;
        while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
        while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty()) {
            throw std::invalid_argument("spec must look like 'j,k', got '" + text + "'");
        }
        return out;
    };
    std::string_view all(text);
    return {number(all.substr(0, comma)), number(all.substr(comma + 1))};
}

std::string RegularOverpartitionSpec::to_string() const { return std::to_string(j) + "," + std::to_string(k); }

std::optional<EtaQuotient> pjk_eta_quotient(const RegularOverpartitionSpec& spec) {
    if (spec.k != 2 * spec.j) return std::nullopt;
    EtaQuotient eq;
    eq.multiply(2, 1).multiply(1, -2);
    eq.multiply(spec.j, 2).multiply(4 * spec.j, 1).multiply(2 * spec.j, -3);
    return eq;
}

Series series_pjk(const RegularOverpartitionSpec& spec, std::size_t order) {
    Series num = mul(pochhammer(1, 1, Sign::plus, order), pochhammer(spec.j, spec.k, Sign::minus, order));
    Series den = mul(pochhammer(1, 1, Sign::minus, order), pochhammer(spec.j, spec.k, Sign::plus, order));
    Series s = divide(num, den);
    if (auto eq = pjk_eta_quotient(spec)) {
        const Series alt = eta_quotient_series(*eq, order);
        if (const long at = first_mismatch(s, alt); at >= 0) {
            throw std::logic_error("series_pjk(" + spec.to_string() + "): product and eta-quotient forms differ at q^" +
                                   std::to_string(at));
        }
    }
    return s;
}

Series series_pjk_mod(const RegularOverpartitionSpec& spec, std::size_t order, std::uint64_t modulus) {
    if (auto eq = pjk_eta_quotient(spec)) return eta_quotient_series_mod(*eq, order, modulus);
    // (-q;q) = f_2/f_1 keeps the computation sparse; the (q^j;q^k) factors are
    // multiplied in one binomial at a time.
    Series s = eta_quotient_series_mod(EtaQuotient{{2, 1}, {1, -2}}, order, modulus);
    Series num = reduce_mod(pochhammer(spec.j, spec.k, Sign::minus, order), modulus);
    Series den = reduce_mod(pochhammer(spec.j, spec.k, Sign::plus, order), modulus);
    return divide(mul(s, num), den);
}

Series series_partition(std::size_t order) { return inverse(euler_f(1, order)); }

Series series_overpartition(std::size_t order) {
    return divide(pochhammer(1, 1, Sign::plus, order), euler_f(1, order));
}

Series series_ell_regular(std::size_t ell, std::size_t order) {
    return divide(euler_f(ell, order), euler_f(1, order));
}

namespace {

// Sum over partitions of n into allowed parts of weight^(number of distinct
// part sizes). Parts are chosen largest first: count(n, s) uses parts <= s.
Integer weighted_partition_count(std::size_t n, const std::function<bool(std::size_t)>& allowed, long weight) {
    // memo[s][m]: weighted count of partitions of m with all parts <= s.
    std::vector<std::vector<Integer>> memo(n + 1, std::vector<Integer>(n + 1));
    std::vector<std::vector<bool>> known(n + 1, std::vector<bool>(n + 1, false));
    std::function<Integer(std::size_t, std::size_t)> count = [&](std::size_t m, std::size_t s) -> Integer {
        if (m == 0) return 1;
        if (s == 0) return 0;
        if (s > m) s = m;
        if (known[s][m]) return memo[s][m];
        // Largest part is < s, or it is s with some multiplicity.
        Integer total = count(m, s - 1);
        if (allowed(s)) {
            for (std::size_t used = s; used <= m; used += s) total += weight * count(m - used, s - 1);
        }
        known[s][m] = true;
        memo[s][m] = total;
        return total;
    };
    return count(n, n);
}

}  // namespace

Integer enumerate_pjk(const RegularOverpartitionSpec& spec, std::size_t n) {
    return weighted_partition_count(n, [&](std::size_t part) { return part % spec.k != spec.j % spec.k; }, 2);
}

Integer enumerate_overpartition(std::size_t n) {
    return weighted_partition_count(n, [](std::size_t) { return true; }, 2);
}

Integer enumerate_partition(std::size_t n) {
    return weighted_partition_count(n, [](std::size_t) { return true; }, 1);
}

Integer enumerate_ell_regular(std::size_t ell, std::size_t n) {
    if (ell == 0) throw std::invalid_argument("enumerate_ell_regular: l must be positive");
    return weighted_partition_count(n, [&](std::size_t part) { return part % ell != 0; }, 1);
}

}  // namespace qseries
