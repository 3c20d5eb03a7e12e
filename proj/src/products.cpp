#include "qseries/products.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace qseries {

namespace {

void add_term(std::vector<Integer>& c, long long exponent, long coefficient) {
    if (exponent >= 0 && static_cast<std::size_t>(exponent) < c.size()) c[exponent] += coefficient;
}

int parity_sign(long long v) { return (v % 2 == 0) ? 1 : -1; }

Series general_theta(const GeneralTheta& t, std::size_t order) {
    if (t.a + t.b == 0) throw std::invalid_argument("theta: exponent weights must satisfy a + b > 0");
    std::vector<Integer> c(order + 1);
    const auto a = static_cast<long long>(t.a);
    const auto b = static_cast<long long>(t.b);
    const auto limit = static_cast<long long>(order);
    const int sa = static_cast<int>(t.sign_a);
    const int sb = static_cast<int>(t.sign_b);
    auto term = [&](long long n) {
        const long long up = n * (n + 1) / 2;
        const long long down = n * (n - 1) / 2;
        const long long e = a * up + b * down;
        int sign = 1;
        if (sa < 0) sign *= parity_sign(up);
        if (sb < 0) sign *= parity_sign(down);
        return std::pair{e, sign};
    };
    // Both one-sided exponent sequences are non-decreasing and eventually
    // strictly increasing because a + b > 0.
    for (long long n = 0;; ++n) {
        auto [e, s] = term(n);
        if (e > limit && n >= 1) break;
        add_term(c, e, s);
    }
    for (long long m = 1;; ++m) {
        auto [e, s] = term(-m);
        if (e > limit && m >= 1) break;
        add_term(c, e, s);
    }
    return Series::from_integers(std::move(c));
}

}  // namespace

Series euler_f(std::size_t k, std::size_t order) {
    if (k == 0) throw std::invalid_argument("euler_f: step must be positive");
    std::vector<Integer> c(order + 1);
    const auto kk = static_cast<long long>(k);
    const auto limit = static_cast<long long>(order);
    c[0] = 1;
    for (long long j = 1;; ++j) {
        const long long e1 = kk * j * (3 * j - 1) / 2;
        const long long e2 = kk * j * (3 * j + 1) / 2;
        if (e1 > limit) break;
        const int s = (j % 2 == 0) ? 1 : -1;
        add_term(c, e1, s);
        add_term(c, e2, s);
    }
    return Series::from_integers(std::move(c));
}

Series pochhammer(std::size_t a, std::size_t c, Sign sign, std::size_t order) {
    if (a == 0 || c == 0) throw std::invalid_argument("pochhammer: a and c must be positive");
    std::vector<Integer> coeffs(order + 1);
    coeffs[0] = 1;
    for (std::size_t e = a; e <= order; e += c) {
        for (std::size_t n = order; n >= e; --n) {
            if (coeffs[n - e] == 0) continue;
            if (sign == Sign::minus) {
                coeffs[n] -= coeffs[n - e];
            } else {
                coeffs[n] += coeffs[n - e];
            }
        }
    }
    return Series::from_integers(std::move(coeffs));
}

Series theta(const ThetaSpec& spec, std::size_t order) {
    struct Visitor {
        std::size_t order;
        Series operator()(const GeneralTheta& t) const { return general_theta(t, order); }
        Series operator()(const Phi&) const {
            std::vector<Integer> c(order + 1);
            c[0] = 1;
            for (std::size_t n = 1; n * n <= order; ++n) c[n * n] = 2;
            return Series::from_integers(std::move(c));
        }
        Series operator()(const Psi&) const {
            std::vector<Integer> c(order + 1);
            for (std::size_t n = 0; n * (n + 1) / 2 <= order; ++n) c[n * (n + 1) / 2] = 1;
            return Series::from_integers(std::move(c));
        }
        Series operator()(const RQuotient&) const {
            Series num = mul(pochhammer(2, 5, Sign::minus, order), pochhammer(3, 5, Sign::minus, order));
            Series den = mul(pochhammer(1, 5, Sign::minus, order), pochhammer(4, 5, Sign::minus, order));
            return divide(num, den);
        }
    };
    return std::visit(Visitor{order}, spec);
}

Series f1_cubed(std::size_t order) {
    std::vector<Integer> c(order + 1);
    for (long n = 0; static_cast<std::size_t>(n * (n + 1) / 2) <= order; ++n) {
        c[n * (n + 1) / 2] = (n % 2 == 0 ? 1 : -1) * (2 * n + 1);
    }
    return Series::from_integers(std::move(c));
}

Series p_series(std::size_t order) {
    std::vector<Integer> c(order + 1);
    const auto limit = static_cast<long long>(order);
    for (long long m = 0;; ++m) {
        const long long e1 = m * (3 * m + 1) / 2;     // m >= 0
        const long long e2 = m * (3 * m - 1) / 2;     // -m
        if (e1 > limit && e2 > limit) break;
        const long s = (m % 2 == 0) ? 1 : -1;
        add_term(c, e1, s * (6 * m + 1));
        if (m > 0) add_term(c, e2, s * (1 - 6 * m));
    }
    return Series::from_integers(std::move(c));
}

Series p_theta_product(std::size_t order) {
    const Series f1 = euler_f(1, order);
    const Series phi = theta(Phi{}, order);
    const Series psi = theta(Psi{}, order);
    Series first = mul(mul(f1, phi), inflate(phi, 3));
    Series second = shift(mul(mul(f1, inflate(psi, 2)), inflate(psi, 6)), 1);
    return add(first, scale(second, 4));
}

EtaQuotient::EtaQuotient(std::initializer_list<std::pair<const std::size_t, long>> factors) {
    for (const auto& [k, e] : factors) multiply(k, e);
}

long EtaQuotient::exponent(std::size_t k) const {
    auto it = factors_.find(k);
    return it == factors_.end() ? 0 : it->second;
}

EtaQuotient& EtaQuotient::multiply(std::size_t k, long e) {
    if (k == 0) throw std::invalid_argument("eta-quotient: step must be positive");
    long& slot = factors_[k];
    slot += e;
    if (slot == 0) factors_.erase(k);
    return *this;
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& other) const {
    EtaQuotient out = *this;
    for (const auto& [k, e] : other.factors_) out.multiply(k, e);
    return out;
}

EtaQuotient EtaQuotient::inflated(std::size_t t) const {
    EtaQuotient out;
    for (const auto& [k, e] : factors_) out.multiply(k * t, e);
    return out;
}

std::string EtaQuotient::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [k, e] : factors_) {
        if (!out.empty()) out += " * ";
        out += "f" + std::to_string(k) + "^" + std::to_string(e);
    }
    return out;
}

EtaQuotient EtaQuotient::parse(const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw EtaParseError("eta-quotient: empty expression");
    if (s == "1") return {};

    auto parse_long = [&](std::string_view v, const std::string& token) {
        long out = 0;
        if (!v.empty() && v.front() == '+') v.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty()) {
            throw EtaParseError("eta-quotient: malformed factor '" + token + "'");
        }
        return out;
    };

    EtaQuotient out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t star = s.find('*', start);
        const std::string token = s.substr(start, star == std::string::npos ? std::string::npos : star - start);
        if (token.empty() || token.front() != 'f') {
            throw EtaParseError("eta-quotient: malformed factor '" + token + "' (expected f<k>^<e>)");
        }
        const std::size_t caret = token.find('^');
        std::string_view step(token);
        step = step.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        long e = 1;
        if (caret != std::string::npos) {
            std::string_view ev = std::string_view(token).substr(caret + 1);
            if (ev.size() >= 2 && ev.front() == '(' && ev.back() == ')') ev = ev.substr(1, ev.size() - 2);
            e = parse_long(ev, token);
        }
        const long k = parse_long(step, token);
        if (k <= 0) throw EtaParseError("eta-quotient: step must be positive in '" + token + "'");
        out.multiply(static_cast<std::size_t>(k), e);
        if (star == std::string::npos) break;
        start = star + 1;
    }
    return out;
}

namespace {

Series accumulate_quotient(const EtaQuotient& eq, std::size_t order, Ring ring) {
    Series result = Series::one(ring, order);
    for (const auto& [k, e] : eq.factors()) {
        Series f = euler_f(k, order);
        if (!ring.is_exact()) f = reduce_mod(f, ring.modulus());
        for (long i = 0; i < std::labs(e); ++i) result = e > 0 ? mul(result, f) : divide(result, f);
    }
    return result;
}

}  // namespace

Series eta_quotient_series(const EtaQuotient& eq, std::size_t order) {
    return accumulate_quotient(eq, order, Ring::exact());
}

Series eta_quotient_series_mod(const EtaQuotient& eq, std::size_t order, std::uint64_t modulus) {
    return accumulate_quotient(eq, order, Ring::integers_mod(modulus));
}

}  // namespace qseries
