#include "qseries/identities.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

#include "qseries/products.hpp"

namespace qseries {

namespace {

// scalar * q^shift * (eta-quotient)
struct Term {
    long scalar;
    std::size_t shift;
    const char* eta;
};

Series eval_terms(std::initializer_list<Term> terms, std::size_t order) {
    Series sum = Series::zero(Ring::exact(), order);
    for (const Term& t : terms) {
        Series s = eta_quotient_series(EtaQuotient::parse(t.eta), order);
        sum = add(sum, shift(scale(s, t.scalar), t.shift));
    }
    return sum;
}

// sum_r q^r part_r(q^p), truncated at order.
Series interleave(const std::vector<std::pair<std::size_t, Series>>& parts, std::size_t p, std::size_t order) {
    std::vector<Integer> out(order + 1);
    for (const auto& [r, part] : parts) {
        for (std::size_t i = 0; i <= part.order() && p * i + r <= order; ++i) out[p * i + r] += part.coefficient(i);
    }
    return Series::from_integers(std::move(out));
}

SeriesRecipe eta(const char* text) {
    return [q = EtaQuotient::parse(text)](std::size_t order) { return eta_quotient_series(q, order); };
}

SeriesRecipe terms(std::initializer_list<Term> list) {
    std::vector<Term> copy(list);
    return [copy](std::size_t order) {
        Series sum = Series::zero(Ring::exact(), order);
        for (const Term& t : copy) sum = add(sum, eval_terms({t}, order));
        return sum;
    };
}

long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

int sign_of_power(long e) { return (std::labs(e) % 2 == 0) ? 1 : -1; }

void require_prime_at_least_5(long p) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("p-dissection needs a prime p >= 5, got " + std::to_string(p));
}

IdentityDatabase build_standard() {
    IdentityDatabase db;
    constexpr std::size_t small = 200;  // 2- and 3-dissections
    constexpr std::size_t large = 300;  // 5-, 7- and p-dissections

    db.add({"two_diss_f1_inv2", "1/f1^2 = f8^5/(f2^5 f16^2) + 2q f4^2 f16^2/(f2^5 f8)", eta("f1^-2"),
            terms({{1, 0, "f8^5*f2^-5*f16^-2"}, {2, 1, "f4^2*f16^2*f2^-5*f8^-1"}}), std::nullopt, small});
    db.add({"two_diss_f1_inv4", "1/f1^4 = f4^14/(f2^14 f8^4) + 4q f4^2 f8^4/f2^10", eta("f1^-4"),
            terms({{1, 0, "f4^14*f2^-14*f8^-4"}, {4, 1, "f4^2*f8^4*f2^-10"}}), std::nullopt, small});
    db.add({"two_diss_f1_sq", "f1^2 = f2 f8^5/(f4^2 f16^2) - 2q f2 f16^2/f8", eta("f1^2"),
            terms({{1, 0, "f2*f8^5*f4^-2*f16^-2"}, {-2, 1, "f2*f16^2*f8^-1"}}), std::nullopt, small});
    db.add({"two_diss_f3cube_over_f1", "f3^3/f1 = f4^3 f6^2/(f2^2 f12) + q f12^3/f4", eta("f3^3*f1^-1"),
            terms({{1, 0, "f4^3*f6^2*f2^-2*f12^-1"}, {1, 1, "f12^3*f4^-1"}}), std::nullopt, small});
    db.add({"three_diss_f2_over_f1sq", "f2/f1^2 = f6^4 f9^6/(f3^8 f18^3) + 2q f6^3 f9^3/f3^7 + 4q^2 f6^2 f18^3/f3^6",
            eta("f2*f1^-2"),
            terms({{1, 0, "f6^4*f9^6*f3^-8*f18^-3"}, {2, 1, "f6^3*f9^3*f3^-7"}, {4, 2, "f6^2*f18^3*f3^-6"}}),
            std::nullopt, small});
    db.add({"three_diss_f1sq_over_f2", "f1^2/f2 = f9^2/f18 - 2q f3 f18^2/(f6 f9)", eta("f1^2*f2^-1"),
            terms({{1, 0, "f9^2*f18^-1"}, {-2, 1, "f3*f18^2*f6^-1*f9^-1"}}), std::nullopt, small});

    // q -> -q sends f1 to f2^3/(f1 f4); applied to the first 2-dissection and
    // multiplied by f2^6/f4^2 it must give the third.
    db.add({"f1_at_minus_q", "f1(-q) = f2^3/(f1 f4)", [](std::size_t n) { return negate_q(euler_f(1, n)); },
            eta("f2^3*f1^-1*f4^-1"), std::nullopt, small});
    db.add({"two_diss_f1_sq_via_minus_q", "(2-dissection of 1/f1^2 at -q) * f2^6/f4^2 = 2-dissection of f1^2",
            [](std::size_t n) {
                Series r = eval_terms({{1, 0, "f8^5*f2^-5*f16^-2"}, {2, 1, "f4^2*f16^2*f2^-5*f8^-1"}}, n);
                return mul(negate_q(r), eta_quotient_series(EtaQuotient::parse("f2^6*f4^-2"), n));
            },
            terms({{1, 0, "f2*f8^5*f4^-2*f16^-2"}, {-2, 1, "f2*f16^2*f8^-1"}}), std::nullopt, small});

    db.add({"e3", "f1^3 = sum (-1)^n (2n+1) q^{n(n+1)/2}", [](std::size_t n) { return pow(euler_f(1, n), 3); },
            [](std::size_t n) { return f1_cubed(n); }, std::nullopt, small});
    db.add({"f1_cubed_three_diss", "f1^3 = P(q^3) - 3q f9^3", eta("f1^3"),
            [](std::size_t n) {
                Series f9 = eta_quotient_series(EtaQuotient{{9, 3}}, n);
                return sub(inflate(p_series(n), 3), shift(scale(f9, 3), 1));
            },
            std::nullopt, small});
    db.add({"p_theta_form", "P(q) = f1 phi(q) phi(q^3) + 4q f1 psi(q^2) psi(q^6)",
            [](std::size_t n) { return p_series(n); }, [](std::size_t n) { return p_theta_product(n); }, std::nullopt,
            small});
    db.add({"f1cubed_mod3_r0", "q^{3n} part of f1^3 is P(q^3)",
            [](std::size_t n) { return extract_progression(f1_cubed(3 * n + 2), 3, 0); },
            [](std::size_t n) { return p_series(n); }, std::nullopt, small});
    db.add({"f1cubed_mod3_r1", "q^{3n+1} part of f1^3 is -3q f9^3",
            [](std::size_t n) { return extract_progression(f1_cubed(3 * n + 2), 3, 1); },
            [](std::size_t n) { return scale(pow(euler_f(3, n), 3), -3); }, std::nullopt, small});
    db.add({"f1cubed_mod3_r2", "q^{3n+2} part of f1^3 vanishes",
            [](std::size_t n) { return extract_progression(f1_cubed(3 * n + 2), 3, 2); },
            [](std::size_t n) { return Series::zero(Ring::exact(), n); }, std::nullopt, small});

    db.add({"f1_five_diss", "f1 = f25 (R(q^5) - q - q^2/R(q^5))", eta("f1"),
            [](std::size_t n) {
                Series r5 = inflate(theta(RQuotient{}, n), 5);
                Series bracket = sub(r5, Series::monomial(Ring::exact(), n, 1));
                bracket = sub(bracket, shift(inverse(r5), 2));
                return mul(euler_f(25, n), bracket);
            },
            std::nullopt, large});
    db.add({"f1_seven_diss", "f1 = f49 (E(q^7)/C(q^7) - q D(q^7)/E(q^7) - q^2 + q^5 C(q^7)/D(q^7))", eta("f1"),
            [](std::size_t n) {
                Series d = inflate(theta(theta_minus(3, 4), n), 7);
                Series e = inflate(theta(theta_minus(2, 5), n), 7);
                Series c = inflate(theta(theta_minus(1, 6), n), 7);
                Series bracket = divide(e, c);
                bracket = sub(bracket, shift(divide(d, e), 1));
                bracket = sub(bracket, Series::monomial(Ring::exact(), n, 2));
                bracket = add(bracket, shift(divide(c, d), 5));
                return mul(euler_f(49, n), bracket);
            },
            std::nullopt, large});

    for (long p : {5L, 7L, 11L, 13L}) {
        db.add({"f1_pdiss_p" + std::to_string(p), "p-dissection of f1 for p = " + std::to_string(p), eta("f1"),
                [p](std::size_t n) { return pdissection_rhs(p, n); }, std::nullopt, large});
    }

    // f1^3 has no terms outside the triangular residues mod p.
    for (std::size_t p : {7u, 11u, 13u, 17u, 19u}) {
        db.add({"split" + std::to_string(p), "f1^3 supported on triangular residues mod " + std::to_string(p),
                [](std::size_t n) { return f1_cubed(n); },
                [p](std::size_t n) {
                    const Series f = f1_cubed(n);
                    std::vector<std::pair<std::size_t, Series>> parts;
                    for (std::size_t r : triangular_split_support(p, n).support) {
                        parts.emplace_back(r, extract_progression(f, p, r));
                    }
                    return interleave(parts, p, n);
                },
                std::nullopt, 500});
    }

    // f_k^{2^a m} = f_{2k}^{2^{a-1} m} (mod 2^a), a = 1..4.
    for (int a = 1; a <= 4; ++a) {
        const long big = 1L << a;
        for (std::size_t k : {1u, 2u, 3u}) {
            for (long m : {1L, 2L, 3L}) {
                const std::string id =
                    "fp" + std::to_string(a) + "_k" + std::to_string(k) + "_m" + std::to_string(m);
                const std::string stmt = "f" + std::to_string(k) + "^" + std::to_string(big * m) + " = f" +
                                         std::to_string(2 * k) + "^" + std::to_string(big / 2 * m) + " (mod " +
                                         std::to_string(big) + ")";
                db.add({id, stmt, [k, e = big * m](std::size_t n) { return eta_quotient_series(EtaQuotient{{k, e}}, n); },
                        [k, e = big / 2 * m](std::size_t n) {
                            return eta_quotient_series(EtaQuotient{{2 * k, e}}, n);
                        },
                        static_cast<std::uint64_t>(big), 120});
            }
        }
    }
    return db;
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

const IdentityDatabase& IdentityDatabase::standard() {
    static const IdentityDatabase db = build_standard();
    return db;
}

const IdentityEntry& IdentityDatabase::find(const std::string& id) const {
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const IdentityEntry& e) { return e.id == id; });
    if (it == entries_.end()) throw UnknownIdentity("unknown identity id '" + id + "'");
    return *it;
}

bool IdentityDatabase::contains(const std::string& id) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const IdentityEntry& e) { return e.id == id; });
}

void IdentityDatabase::add(IdentityEntry entry) {
    if (contains(entry.id)) throw std::invalid_argument("duplicate identity id '" + entry.id + "'");
    entries_.push_back(std::move(entry));
}

IdentityResult verify_identity(const IdentityEntry& entry, std::size_t order) {
    Series lhs = entry.lhs(order);
    Series rhs = entry.rhs(order);
    if (entry.modulus) {
        lhs = reduce_mod(lhs, *entry.modulus);
        rhs = reduce_mod(rhs, *entry.modulus);
    }
    if (lhs.order() < order || rhs.order() < order) {
        throw std::logic_error("identity '" + entry.id + "' produced a series below the requested order");
    }
    const long at = first_mismatch(lhs, rhs);
    IdentityResult out{entry.id, order, at < 0, std::nullopt};
    if (at >= 0) out.first_mismatch = static_cast<std::size_t>(at);
    return out;
}

IdentityResult verify_identity(const std::string& id, std::size_t order) {
    return verify_identity(IdentityDatabase::standard().find(id), order);
}

long pdissection_excluded_index(long p) {
    require_prime_at_least_5(p);
    return mod_floor(p, 6) == 1 ? (p - 1) / 6 : (-p - 1) / 6;
}

std::vector<long> pdissection_admissible_indices(long p) {
    const long excluded = pdissection_excluded_index(p);
    std::vector<long> ks;
    for (long k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
        if (k != excluded) ks.push_back(k);
    }
    return ks;
}

Series pdissection_rhs(long p, std::size_t order) {
    const long excluded = pdissection_excluded_index(p);
    Series sum = Series::zero(Ring::exact(), order);
    for (long k : pdissection_admissible_indices(p)) {
        const long offset = (3 * k * k + k) / 2;
        const long a = (3 * p * p + (6 * k + 1) * p) / 2;
        const long b = (3 * p * p - (6 * k + 1) * p) / 2;
        Series t = theta(theta_minus(static_cast<std::size_t>(a), static_cast<std::size_t>(b)), order);
        sum = add(sum, shift(scale(t, sign_of_power(k)), static_cast<std::size_t>(offset)));
    }
    Series tail = euler_f(static_cast<std::size_t>(p * p), order);
    tail = shift(scale(tail, sign_of_power(excluded)), static_cast<std::size_t>((p * p - 1) / 24));
    return add(sum, tail);
}

PDissectionResult verify_p_dissection(long p, std::size_t order) {
    require_prime_at_least_5(p);
    const long at = first_mismatch(euler_f(1, order), pdissection_rhs(p, order));
    PDissectionResult out{at < 0, std::nullopt, true};
    if (at >= 0) out.first_mismatch = static_cast<std::size_t>(at);
    const long target = mod_floor((p * p - 1) / 24, p);
    for (long k : pdissection_admissible_indices(p)) {
        if (mod_floor((3 * k * k + k) / 2, p) == target) out.residue_condition = false;
    }
    return out;
}

TriangularSplit triangular_split_support(std::size_t p, std::size_t order) {
    if (p < 2) throw std::invalid_argument("triangular_split_support: p must be at least 2");
    TriangularSplit out{{}, true, true, std::nullopt};
    for (std::size_t n = 0; n < p; ++n) out.support.insert((n * (n + 1) / 2) % p);
    for (std::size_t n = 0; n < p; ++n) {
        if ((2 * n + 1) % p == 0) out.divisible_class = (n * (n + 1) / 2) % p;
    }
    const Series f = f1_cubed(order);
    for (std::size_t r = 0; r < p; ++r) {
        const Series part = extract_progression(f, p, r);
        if (!out.support.contains(r) && !part.is_zero()) out.zero_outside_support = false;
        if (out.divisible_class == r) {
            for (const Integer& c : part.exact_coefficients()) {
                if (c % static_cast<unsigned long>(p) != 0) out.divisible_class_ok = false;
            }
        }
    }
    return out;
}

}  // namespace qseries
