#pragma once

// Truncated formal power series over Z or Z/MZ.
//
// A Series of order N stores the coefficients of q^0 .. q^N. Binary
// operations on inputs of different orders truncate to the smaller order;
// every result is the exact product/sum with terms above q^N discarded.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qseries {

using Integer = mpz_class;

class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonUnitConstant : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Either the integers or the integers modulo M (2 <= M < 2^63).
class Ring {
public:
    static Ring exact() noexcept { return Ring{}; }
    static Ring integers_mod(std::uint64_t modulus);

    bool is_exact() const noexcept { return modulus_ == 0; }
    // 0 for the exact ring.
    std::uint64_t modulus() const noexcept { return modulus_; }
    bool is_power_of_two() const noexcept { return modulus_ != 0 && (modulus_ & (modulus_ - 1)) == 0; }

    std::string to_string() const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    std::uint64_t modulus_ = 0;
};

class Series {
public:
    // The zero series of order 0 over Z.
    Series() : exact_(1) {}

    static Series zero(Ring ring, std::size_t order);
    static Series one(Ring ring, std::size_t order);
    // q^k (zero when k > order).
    static Series monomial(Ring ring, std::size_t order, std::size_t k, long coefficient = 1);

    static Series from_integers(std::vector<Integer> coeffs);
    static Series from_integers(std::initializer_list<long> coeffs);
    // Residues are reduced into [0, modulus).
    static Series from_residues(std::uint64_t modulus, std::vector<std::uint64_t> residues);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t order() const noexcept { return size() - 1; }
    std::size_t size() const noexcept { return ring_.is_exact() ? exact_.size() : residues_.size(); }

    // Coefficient of q^i as an integer (the reduced representative in Z/MZ).
    Integer coefficient(std::size_t i) const;
    bool is_zero_at(std::size_t i) const;
    bool is_zero() const;

    // Throws std::logic_error when called on the wrong ring kind.
    std::span<const Integer> exact_coefficients() const;
    std::span<const std::uint64_t> residues() const;

    Series truncated(std::size_t order) const;

    friend bool operator==(const Series& a, const Series& b);

private:
    friend struct SeriesAccess;

    Ring ring_;
    std::vector<Integer> exact_;
    std::vector<std::uint64_t> residues_;
};

// Ring operations. All throw RingMismatch when the rings differ.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scale(const Series& a, const Integer& c);
Series mul(const Series& a, const Series& b);

// Multiplicative inverse through the truncation order. Throws NonUnitConstant
// when the constant term is not a unit (±1 over Z, gcd(c0, M) = 1 mod M).
Series inverse(const Series& a);
// a * inverse(b), computed by the division recurrence directly.
Series divide(const Series& a, const Series& b);
// Binary exponentiation; negative exponents go through inverse().
Series pow(const Series& a, long e);

// q -> q^t, same order.
Series inflate(const Series& a, std::size_t t);
// coefficients a[m*n + r]; the zero series of order 0 when r > order.
Series extract_progression(const Series& a, std::size_t m, std::size_t r);
// Multiply by q^k (keeps the order, drops overflow).
Series shift(const Series& a, std::size_t k);
// q -> -q.
Series negate_q(const Series& a);

// Exact (or mod M') series reduced into Z/MZ. When the input is already
// modular, M must divide its modulus.
Series reduce_mod(const Series& a, std::uint64_t modulus);

// First index where a and b differ (compared up to the smaller order), or
// -1 when they agree. Throws RingMismatch.
long first_mismatch(const Series& a, const Series& b);

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);

// Text form: "exact order N; c0 c1 ..." or "mod M order N; c0 c1 ...".
std::string to_text(const Series& s);
Series parse_series(const std::string& text);

}  // namespace qseries
