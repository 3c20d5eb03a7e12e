#pragma once

// Generating functions for p(n), overpartitions, l-regular partitions and
// (j,k)-regular overpartitions, plus enumeration oracles that never touch a
// generating function.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qseries/products.hpp"
#include "qseries/series.hpp"

namespace qseries {

// Overpartitions none of whose parts is congruent to j modulo k.
struct RegularOverpartitionSpec {
    std::size_t j;
    std::size_t k;

    // Throws std::invalid_argument unless 1 <= j < k.
    RegularOverpartitionSpec(std::size_t j_, std::size_t k_);

    // "4,8"
    static RegularOverpartitionSpec parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(const RegularOverpartitionSpec&, const RegularOverpartitionSpec&) = default;
    friend auto operator<=>(const RegularOverpartitionSpec&, const RegularOverpartitionSpec&) = default;
};

// The eta-quotient form of the generating function when k = 2j:
// f_2 f_j^2 f_{4j} / (f_1^2 f_{2j}^3).
std::optional<EtaQuotient> pjk_eta_quotient(const RegularOverpartitionSpec& spec);

// (-q;q)(q^j;q^k) / ((q;q)(-q^j;q^k)) from the Pochhammer products. When an
// eta-quotient form exists it is evaluated too and the two must agree
// (std::logic_error otherwise).
Series series_pjk(const RegularOverpartitionSpec& spec, std::size_t order);

// The same generating function in Z/MZ; uses the eta-quotient form when
// available.
Series series_pjk_mod(const RegularOverpartitionSpec& spec, std::size_t order, std::uint64_t modulus);

Series series_partition(std::size_t order);      // 1/f_1
Series series_overpartition(std::size_t order);  // (-q;q)/(q;q)
Series series_ell_regular(std::size_t ell, std::size_t order);  // f_l/f_1

// Enumeration oracles: weighted counts over partitions of n, largest part
// first.
Integer enumerate_pjk(const RegularOverpartitionSpec& spec, std::size_t n);
Integer enumerate_overpartition(std::size_t n);
Integer enumerate_partition(std::size_t n);
Integer enumerate_ell_regular(std::size_t ell, std::size_t n);

}  // namespace qseries
