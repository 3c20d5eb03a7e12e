#include "qseries/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qseries {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct SeriesAccess {
    static std::vector<Integer>& exact(Series& s) { return s.exact_; }
    static std::vector<u64>& residues(Series& s) { return s.residues_; }
    static Ring& ring(Series& s) { return s.ring_; }
};

namespace {

constexpr u64 max_modulus = u64{1} << 63;

void require_same_ring(const Series& a, const Series& b, const char* op) {
    if (!(a.ring() == b.ring())) {
        throw RingMismatch(std::string(op) + ": ring mismatch (" + a.ring().to_string() + " vs " +
                           b.ring().to_string() + ")");
    }
}

Series make_exact(std::vector<Integer> c) {
    Series s;
    SeriesAccess::exact(s) = std::move(c);
    return s;
}

Series make_mod(u64 m, std::vector<u64> c) {
    Series s;
    SeriesAccess::ring(s) = Ring::integers_mod(m);
    SeriesAccess::exact(s).clear();
    SeriesAccess::residues(s) = std::move(c);
    return s;
}

static_assert(sizeof(unsigned long) == sizeof(u64), "64-bit unsigned long required by the GMP bridge");

u64 reduce_integer(const Integer& v, u64 m) {
    Integer r = v % static_cast<unsigned long>(m);  // sign follows v
    if (r < 0) r += static_cast<unsigned long>(m);
    return r.get_ui();
}

Integer to_integer(u64 v) { return Integer(static_cast<unsigned long>(v)); }

// Arithmetic in Z/MZ on 64-bit words. Power-of-two moduli use wrapping
// arithmetic and a final mask.
struct ModArith {
    u64 m;
    bool pow2;
    u64 mask;

    explicit ModArith(u64 modulus) : m(modulus), pow2((modulus & (modulus - 1)) == 0), mask(modulus - 1) {}

    u64 add(u64 a, u64 b) const {
        if (pow2) return (a + b) & mask;
        u64 s = a + b;  // a, b < 2^63
        return s >= m ? s - m : s;
    }
    u64 sub(u64 a, u64 b) const {
        if (pow2) return (a - b) & mask;
        return a >= b ? a - b : a + (m - b);
    }
    u64 mul(u64 a, u64 b) const {
        if (pow2) return (a * b) & mask;
        return static_cast<u64>((static_cast<u128>(a) * b) % m);
    }
    u64 neg(u64 a) const { return a == 0 ? 0 : m - a; }
};

template <class T>
std::vector<std::size_t> nonzero_indices(std::span<const T> c, std::size_t upto) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i <= upto && i < c.size(); ++i) {
        if (c[i] != 0) idx.push_back(i);
    }
    return idx;
}

std::vector<u64> mul_mod(std::span<const u64> a, std::span<const u64> b, std::size_t order, const ModArith& ar) {
    auto na = nonzero_indices(a, order);
    auto nb = nonzero_indices(b, order);
    const std::span<const u64>* inner = &b;
    const std::vector<std::size_t>* outer_idx = &na;
    const std::span<const u64>* outer = &a;
    if (nb.size() < na.size()) {
        inner = &a;
        outer = &b;
        outer_idx = &nb;
    }
    std::vector<u64> out(order + 1, 0);
    if (ar.pow2) {
        for (std::size_t i : *outer_idx) {
            const u64 ai = (*outer)[i];
            u64* dst = out.data() + i;
            const u64* src = inner->data();
            const std::size_t len = order - i + 1;
            for (std::size_t j = 0; j < len; ++j) dst[j] += ai * src[j];
        }
        for (auto& v : out) v &= ar.mask;
    } else {
        for (std::size_t i : *outer_idx) {
            const u64 ai = (*outer)[i];
            for (std::size_t j = 0; i + j <= order; ++j) {
                out[i + j] = ar.add(out[i + j], ar.mul(ai, (*inner)[j]));
            }
        }
    }
    return out;
}

std::vector<Integer> mul_exact(std::span<const Integer> a, std::span<const Integer> b, std::size_t order) {
    auto na = nonzero_indices(a, order);
    auto nb = nonzero_indices(b, order);
    const std::span<const Integer>* inner = &b;
    const std::span<const Integer>* outer = &a;
    const std::vector<std::size_t>* outer_idx = &na;
    if (nb.size() < na.size()) {
        inner = &a;
        outer = &b;
        outer_idx = &nb;
    }
    std::vector<Integer> out(order + 1);
    for (std::size_t i : *outer_idx) {
        const Integer& ai = (*outer)[i];
        for (std::size_t j = 0; i + j <= order; ++j) {
            if ((*inner)[j] != 0) mpz_addmul(out[i + j].get_mpz_t(), ai.get_mpz_t(), (*inner)[j].get_mpz_t());
        }
    }
    return out;
}

u64 unit_inverse_mod(u64 c0, u64 m) {
    Integer inv;
    Integer c = to_integer(c0);
    Integer mm = to_integer(m);
    if (mpz_invert(inv.get_mpz_t(), c.get_mpz_t(), mm.get_mpz_t()) == 0) {
        throw NonUnitConstant("constant term " + c.get_str() + " is not a unit modulo " + mm.get_str());
    }
    return reduce_integer(inv, m);
}

}  // namespace

Ring Ring::integers_mod(std::uint64_t modulus) {
    if (modulus < 2 || modulus >= max_modulus) {
        throw std::invalid_argument("modulus must satisfy 2 <= M < 2^63, got " + std::to_string(modulus));
    }
    Ring r;
    r.modulus_ = modulus;
    return r;
}

std::string Ring::to_string() const { return is_exact() ? "exact" : "mod " + std::to_string(modulus_); }

Series Series::zero(Ring ring, std::size_t order) {
    if (ring.is_exact()) return make_exact(std::vector<Integer>(order + 1));
    return make_mod(ring.modulus(), std::vector<u64>(order + 1, 0));
}

Series Series::one(Ring ring, std::size_t order) { return monomial(ring, order, 0, 1); }

Series Series::monomial(Ring ring, std::size_t order, std::size_t k, long coefficient) {
    Series s = zero(ring, order);
    if (k > order) return s;
    if (ring.is_exact()) {
        s.exact_[k] = coefficient;
    } else {
        s.residues_[k] = reduce_integer(Integer(coefficient), ring.modulus());
    }
    return s;
}

Series Series::from_integers(std::vector<Integer> coeffs) {
    if (coeffs.empty()) coeffs.emplace_back(0);
    return make_exact(std::move(coeffs));
}

Series Series::from_integers(std::initializer_list<long> coeffs) {
    std::vector<Integer> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return from_integers(std::move(c));
}

Series Series::from_residues(std::uint64_t modulus, std::vector<std::uint64_t> residues) {
    Ring r = Ring::integers_mod(modulus);
    if (residues.empty()) residues.push_back(0);
    for (auto& v : residues) v %= r.modulus();
    return make_mod(modulus, std::move(residues));
}

Integer Series::coefficient(std::size_t i) const {
    if (i > order()) throw std::out_of_range("coefficient index " + std::to_string(i) + " beyond order " +
                                             std::to_string(order()));
    return ring_.is_exact() ? exact_[i] : to_integer(residues_[i]);
}

bool Series::is_zero_at(std::size_t i) const {
    if (i > order()) throw std::out_of_range("coefficient index beyond order");
    return ring_.is_exact() ? exact_[i] == 0 : residues_[i] == 0;
}

bool Series::is_zero() const {
    if (ring_.is_exact()) return std::all_of(exact_.begin(), exact_.end(), [](const Integer& v) { return v == 0; });
    return std::all_of(residues_.begin(), residues_.end(), [](u64 v) { return v == 0; });
}

std::span<const Integer> Series::exact_coefficients() const {
    if (!ring_.is_exact()) throw std::logic_error("exact_coefficients() on a modular series");
    return exact_;
}

std::span<const std::uint64_t> Series::residues() const {
    if (ring_.is_exact()) throw std::logic_error("residues() on an exact series");
    return residues_;
}

Series Series::truncated(std::size_t new_order) const {
    Series s = *this;
    if (new_order >= order()) return s;
    if (ring_.is_exact()) {
        s.exact_.resize(new_order + 1);
    } else {
        s.residues_.resize(new_order + 1);
    }
    return s;
}

bool operator==(const Series& a, const Series& b) {
    if (!(a.ring_ == b.ring_)) return false;
    return a.ring_.is_exact() ? a.exact_ == b.exact_ : a.residues_ == b.residues_;
}

Series add(const Series& a, const Series& b) {
    require_same_ring(a, b, "add");
    const std::size_t n = std::min(a.order(), b.order());
    if (a.ring().is_exact()) {
        std::vector<Integer> c(n + 1);
        auto x = a.exact_coefficients();
        auto y = b.exact_coefficients();
        for (std::size_t i = 0; i <= n; ++i) c[i] = x[i] + y[i];
        return make_exact(std::move(c));
    }
    ModArith ar(a.ring().modulus());
    std::vector<u64> c(n + 1);
    auto x = a.residues();
    auto y = b.residues();
    for (std::size_t i = 0; i <= n; ++i) c[i] = ar.add(x[i], y[i]);
    return make_mod(ar.m, std::move(c));
}

Series negate(const Series& a) {
    if (a.ring().is_exact()) {
        std::vector<Integer> c(a.exact_coefficients().begin(), a.exact_coefficients().end());
        for (auto& v : c) v = -v;
        return make_exact(std::move(c));
    }
    ModArith ar(a.ring().modulus());
    std::vector<u64> c(a.residues().begin(), a.residues().end());
    for (auto& v : c) v = ar.neg(v);
    return make_mod(ar.m, std::move(c));
}

Series sub(const Series& a, const Series& b) {
    require_same_ring(a, b, "sub");
    return add(a, negate(b));
}

Series scale(const Series& a, const Integer& k) {
    if (a.ring().is_exact()) {
        std::vector<Integer> c(a.exact_coefficients().begin(), a.exact_coefficients().end());
        for (auto& v : c) v *= k;
        return make_exact(std::move(c));
    }
    ModArith ar(a.ring().modulus());
    const u64 kk = reduce_integer(k, ar.m);
    std::vector<u64> c(a.residues().begin(), a.residues().end());
    for (auto& v : c) v = ar.mul(v, kk);
    return make_mod(ar.m, std::move(c));
}

Series mul(const Series& a, const Series& b) {
    require_same_ring(a, b, "mul");
    const std::size_t n = std::min(a.order(), b.order());
    if (a.ring().is_exact()) return make_exact(mul_exact(a.exact_coefficients(), b.exact_coefficients(), n));
    ModArith ar(a.ring().modulus());
    return make_mod(ar.m, mul_mod(a.residues(), b.residues(), n, ar));
}

Series divide(const Series& a, const Series& b) {
    require_same_ring(a, b, "divide");
    const std::size_t n = std::min(a.order(), b.order());
    if (a.ring().is_exact()) {
        auto x = a.exact_coefficients();
        auto d = b.exact_coefficients();
        const Integer& d0 = d[0];
        if (d0 != 1 && d0 != -1) {
            throw NonUnitConstant("constant term " + d0.get_str() + " is not a unit over the integers");
        }
        std::vector<std::size_t> nz;
        for (std::size_t i = 1; i <= n; ++i) {
            if (d[i] != 0) nz.push_back(i);
        }
        std::vector<Integer> out(n + 1);
        Integer acc;
        for (std::size_t k = 0; k <= n; ++k) {
            acc = x[k];
            for (std::size_t i : nz) {
                if (i > k) break;
                mpz_submul(acc.get_mpz_t(), d[i].get_mpz_t(), out[k - i].get_mpz_t());
            }
            // 1/d0 == d0 for d0 = ±1
            if (d0 < 0) acc = -acc;
            out[k].swap(acc);
        }
        return make_exact(std::move(out));
    }
    ModArith ar(a.ring().modulus());
    auto x = a.residues();
    auto d = b.residues();
    const u64 inv0 = unit_inverse_mod(d[0], ar.m);
    std::vector<std::size_t> nz;
    for (std::size_t i = 1; i <= n; ++i) {
        if (d[i] != 0) nz.push_back(i);
    }
    std::vector<u64> out(n + 1, 0);
    if (ar.pow2) {
        for (std::size_t k = 0; k <= n; ++k) {
            u64 acc = x[k];
            for (std::size_t i : nz) {
                if (i > k) break;
                acc -= d[i] * out[k - i];
            }
            out[k] = (acc * inv0) & ar.mask;
        }
    } else {
        for (std::size_t k = 0; k <= n; ++k) {
            u64 acc = x[k];
            for (std::size_t i : nz) {
                if (i > k) break;
                acc = ar.sub(acc, ar.mul(d[i], out[k - i]));
            }
            out[k] = ar.mul(acc, inv0);
        }
    }
    return make_mod(ar.m, std::move(out));
}

Series inverse(const Series& a) { return divide(Series::one(a.ring(), a.order()), a); }

Series pow(const Series& a, long e) {
    if (e < 0) return pow(inverse(a), -e);
    Series result = Series::one(a.ring(), a.order());
    Series base = a;
    auto k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1UL) result = mul(result, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return result;
}

Series inflate(const Series& a, std::size_t t) {
    if (t == 0) throw std::invalid_argument("inflate: step must be positive");
    Series out = Series::zero(a.ring(), a.order());
    const std::size_t n = a.order();
    if (a.ring().is_exact()) {
        auto src = a.exact_coefficients();
        auto& dst = SeriesAccess::exact(out);
        for (std::size_t i = 0; i * t <= n; ++i) dst[i * t] = src[i];
    } else {
        auto src = a.residues();
        auto& dst = SeriesAccess::residues(out);
        for (std::size_t i = 0; i * t <= n; ++i) dst[i * t] = src[i];
    }
    return out;
}

Series extract_progression(const Series& a, std::size_t m, std::size_t r) {
    if (m == 0) throw std::invalid_argument("extract_progression: modulus must be positive");
    if (r >= m) {
        throw std::invalid_argument("extract_progression: residue " + std::to_string(r) + " must be < " +
                                    std::to_string(m));
    }
    if (r > a.order()) return Series::zero(a.ring(), 0);
    const std::size_t n = (a.order() - r) / m;
    if (a.ring().is_exact()) {
        auto src = a.exact_coefficients();
        std::vector<Integer> c(n + 1);
        for (std::size_t i = 0; i <= n; ++i) c[i] = src[m * i + r];
        return make_exact(std::move(c));
    }
    auto src = a.residues();
    std::vector<u64> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = src[m * i + r];
    return make_mod(a.ring().modulus(), std::move(c));
}

Series shift(const Series& a, std::size_t k) {
    Series out = Series::zero(a.ring(), a.order());
    const std::size_t n = a.order();
    if (a.ring().is_exact()) {
        auto src = a.exact_coefficients();
        auto& dst = SeriesAccess::exact(out);
        for (std::size_t i = 0; i + k <= n; ++i) dst[i + k] = src[i];
    } else {
        auto src = a.residues();
        auto& dst = SeriesAccess::residues(out);
        for (std::size_t i = 0; i + k <= n; ++i) dst[i + k] = src[i];
    }
    return out;
}

Series negate_q(const Series& a) {
    Series out = a;
    if (a.ring().is_exact()) {
        auto& c = SeriesAccess::exact(out);
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    } else {
        ModArith ar(a.ring().modulus());
        auto& c = SeriesAccess::residues(out);
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = ar.neg(c[i]);
    }
    return out;
}

Series reduce_mod(const Series& a, std::uint64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("reduce_mod: modulus must be at least 2");
    Ring target = Ring::integers_mod(modulus);
    if (a.ring().is_exact()) {
        auto src = a.exact_coefficients();
        std::vector<u64> c(src.size());
        for (std::size_t i = 0; i < src.size(); ++i) c[i] = reduce_integer(src[i], modulus);
        return make_mod(modulus, std::move(c));
    }
    if (a.ring().modulus() % modulus != 0) {
        throw RingMismatch("reduce_mod: " + std::to_string(modulus) + " does not divide " +
                           std::to_string(a.ring().modulus()));
    }
    std::vector<u64> c(a.residues().begin(), a.residues().end());
    for (auto& v : c) v %= target.modulus();
    return make_mod(modulus, std::move(c));
}

long first_mismatch(const Series& a, const Series& b) {
    require_same_ring(a, b, "compare");
    const std::size_t n = std::min(a.order(), b.order());
    if (a.ring().is_exact()) {
        auto x = a.exact_coefficients();
        auto y = b.exact_coefficients();
        for (std::size_t i = 0; i <= n; ++i) {
            if (x[i] != y[i]) return static_cast<long>(i);
        }
        return -1;
    }
    auto x = a.residues();
    auto y = b.residues();
    for (std::size_t i = 0; i <= n; ++i) {
        if (x[i] != y[i]) return static_cast<long>(i);
    }
    return -1;
}

Series operator+(const Series& a, const Series& b) { return add(a, b); }
Series operator-(const Series& a, const Series& b) { return sub(a, b); }
Series operator-(const Series& a) { return negate(a); }
Series operator*(const Series& a, const Series& b) { return mul(a, b); }

std::string to_text(const Series& s) {
    std::ostringstream os;
    os << s.ring().to_string() << " order " << s.order() << ";";
    for (std::size_t i = 0; i <= s.order(); ++i) os << ' ' << s.coefficient(i).get_str();
    return os.str();
}

Series parse_series(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("series text: missing ';'");
    std::istringstream head(text.substr(0, semi));
    std::string word;
    u64 modulus = 0;
    head >> word;
    if (word == "mod") {
        if (!(head >> modulus)) throw std::invalid_argument("series text: bad modulus");
        head >> word;
    } else if (word == "exact") {
        head >> word;
    }
    std::size_t order = 0;
    if (word != "order" || !(head >> order)) throw std::invalid_argument("series text: expected 'order N'");
    std::string rest;
    if (head >> rest) throw std::invalid_argument("series text: trailing header token '" + rest + "'");

    std::istringstream body(text.substr(semi + 1));
    std::vector<Integer> coeffs;
    std::string tok;
    while (body >> tok) {
        Integer v;
        if (v.set_str(tok, 10) != 0) throw std::invalid_argument("series text: bad coefficient '" + tok + "'");
        coeffs.push_back(std::move(v));
    }
    if (coeffs.size() != order + 1) {
        throw std::invalid_argument("series text: order " + std::to_string(order) + " needs " +
                                    std::to_string(order + 1) + " coefficients, got " +
                                    std::to_string(coeffs.size()));
    }
    Series s = Series::from_integers(std::move(coeffs));
    return modulus == 0 ? s : reduce_mod(s, modulus);
}

}  // namespace qseries
