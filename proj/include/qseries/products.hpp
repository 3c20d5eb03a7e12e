#pragma once

// Constructors for the named q-series: Euler products f_k, q-Pochhammer
// products, Ramanujan theta functions and eta-quotients. Every constructor
// returns an exact-integer series; reduction modulo M is a separate step.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>

#include "qseries/series.hpp"

namespace qseries {

// f_k = (q^k; q^k)_inf, expanded with the pentagonal number theorem.
Series euler_f(std::size_t k, std::size_t order);

enum class Sign : int { minus = -1, plus = 1 };

// prod_{i>=0} (1 - q^{a+ic}) for Sign::minus, (1 + q^{a+ic}) for Sign::plus.
Series pochhammer(std::size_t a, std::size_t c, Sign sign, std::size_t order);

// f(sa*q^a, sb*q^b) = sum_{n in Z} sa^{n(n+1)/2} sb^{n(n-1)/2} q^{a n(n+1)/2 + b n(n-1)/2}.
struct GeneralTheta {
    std::size_t a;
    std::size_t b;
    Sign sign_a = Sign::plus;
    Sign sign_b = Sign::plus;
};
struct Phi {};        // sum_{n in Z} q^{n^2}
struct Psi {};        // sum_{n >= 0} q^{n(n+1)/2}
struct RQuotient {};  // (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5))

using ThetaSpec = std::variant<GeneralTheta, Phi, Psi, RQuotient>;

// f(-q^a, -q^b), the form used in the dissection formulas.
inline GeneralTheta theta_minus(std::size_t a, std::size_t b) { return {a, b, Sign::minus, Sign::minus}; }

Series theta(const ThetaSpec& spec, std::size_t order);

// f_1^3 as sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}.
Series f1_cubed(std::size_t order);

// P(q) = sum_{m in Z} (-1)^m (6m+1) q^{m(3m+1)/2}.
Series p_series(std::size_t order);
// f(-q) phi(q) phi(q^3) + 4q f(-q) psi(q^2) psi(q^6) with f(-q) = f_1.
Series p_theta_product(std::size_t order);

class EtaParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A finite product prod f_k^{e_k}; zero exponents are never stored.
class EtaQuotient {
public:
    EtaQuotient() = default;
    EtaQuotient(std::initializer_list<std::pair<const std::size_t, long>> factors);

    // Accepts "f1^-2 * f2 * f4^2" (whitespace-insensitive) and "1".
    static EtaQuotient parse(const std::string& text);

    const std::map<std::size_t, long>& factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }
    long exponent(std::size_t k) const;

    EtaQuotient& multiply(std::size_t k, long e);
    EtaQuotient operator*(const EtaQuotient& other) const;
    // Replaces every f_k by f_{t k}.
    EtaQuotient inflated(std::size_t t) const;

    std::string to_string() const;

    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

private:
    std::map<std::size_t, long> factors_;
};

Series eta_quotient_series(const EtaQuotient& eq, std::size_t order);
// Same product evaluated in Z/MZ: each f_k is built exactly, reduced, and the
// quotient is accumulated by sparse multiplication/division modulo M.
Series eta_quotient_series_mod(const EtaQuotient& eq, std::size_t order, std::uint64_t modulus);

}  // namespace qseries
