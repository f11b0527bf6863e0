#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "snevily/numtheory.hpp"

namespace snevily {

namespace detail {

// Dense polynomials over F_p: coefficient vectors, constant term first,
// no trailing zero coefficients (zero polynomial = empty vector).

using PolyP = std::vector<std::uint64_t>;

inline void poly_trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PolyP poly_mul(const PolyP& a, const PolyP& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    poly_trim(out);
    return out;
}

inline std::uint64_t scalar_inv(std::uint64_t c, std::uint64_t p) {
    if (c % p == 0) throw std::domain_error("scalar_inv: zero has no inverse");
    return pow_mod(c, p - 2, p);
}

/// Remainder of a modulo f (f need not be monic).
inline PolyP poly_rem(PolyP a, const PolyP& f, std::uint64_t p) {
    poly_trim(a);
    if (f.empty()) throw std::domain_error("poly_rem: division by zero polynomial");
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = scalar_inv(f.back(), p);
    while (a.size() > df) {
        const std::uint64_t c = a.back() % p;
        if (c != 0) {
            const std::uint64_t q = c * lead_inv % p;
            const std::size_t shift = a.size() - f.size();
            for (std::size_t j = 0; j < f.size(); ++j) {
                const std::uint64_t s = q * f[j] % p;
                a[shift + j] = (a[shift + j] + p - s) % p;
            }
        }
        a.pop_back();
        poly_trim(a);
        if (a.size() <= df) break;
    }
    poly_trim(a);
    return a;
}

inline PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& f, std::uint64_t p) {
    return poly_rem(poly_mul(a, b, p), f, p);
}

inline PolyP poly_powmod(PolyP base, std::uint64_t exp, const PolyP& f, std::uint64_t p) {
    PolyP result{1};
    base = poly_rem(std::move(base), f, p);
    while (exp > 0) {
        if (exp & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        exp >>= 1;
    }
    return result;
}

inline PolyP poly_make_monic(PolyP a, std::uint64_t p) {
    poly_trim(a);
    if (a.empty()) return a;
    const std::uint64_t inv = scalar_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

inline PolyP poly_gcd(PolyP a, PolyP b, std::uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        PolyP r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(std::move(a), p);
}

inline PolyP poly_sub(PolyP a, const PolyP& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + p - b[i] % p) % p;
    poly_trim(a);
    return a;
}

/// Rabin's irreducibility test for monic f over F_p:
/// x^{p^d} = x (mod f) and gcd(x^{p^{d/l}} - x, f) = 1 for every prime l | d.
inline bool poly_is_irreducible(const PolyP& f, std::uint64_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 0) return false;
    const PolyP x{0, 1};
    // frob[j] = x^{p^j} mod f
    std::vector<PolyP> frob(d + 1);
    frob[0] = poly_rem(x, f, p);
    for (std::size_t j = 1; j <= d; ++j)
        frob[j] = poly_powmod(frob[j - 1], p, f, p);
    if (poly_sub(frob[d], poly_rem(x, f, p), p) != PolyP{}) return false;
    for (std::uint64_t l : prime_divisors(d)) {
        PolyP g = poly_gcd(poly_sub(frob[d / l], poly_rem(x, f, p), p), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

/// Exact arithmetic in GF(p^d) where d is the multiplicative order of p mod n,
/// so that the field carries an element zeta of exact order n.
///
/// The modulus is the first monic irreducible polynomial of degree d in
/// canonical order (coefficient vectors read as base-p integers, constant term
/// least significant), and zeta is found by scanning field elements in the
/// same canonical order. Construction is therefore fully deterministic.
class PrimePowerField {
public:
    /// Coefficient vector of length degree(), entries in [0, p).
    using Elem = std::vector<std::uint64_t>;

    PrimePowerField(std::uint64_t p, std::uint64_t n) : p_(p), n_(n) {
        if (!is_prime(p))
            throw std::invalid_argument("PrimePowerField: characteristic must be prime");
        if (n == 0)
            throw std::invalid_argument("PrimePowerField: root order must be positive");
        if (n % p == 0)
            throw std::domain_error("PrimePowerField: characteristic divides root order");
        if (p >= (1ULL << 31))
            throw std::invalid_argument("PrimePowerField: characteristic too large");
        d_ = multiplicative_order(p, n);
        q_ = 1;
        for (std::uint64_t i = 0; i < d_; ++i) {
            if (q_ > (1ULL << 62) / p)
                throw std::invalid_argument("PrimePowerField: field size overflows");
            q_ *= p;
        }
        find_modulus();
        find_zeta();
    }

    std::uint64_t characteristic() const { return p_; }
    std::uint64_t degree() const { return d_; }
    std::uint64_t field_size() const { return q_; }
    std::uint64_t root_order() const { return n_; }
    /// Monic modulus polynomial, length d+1, leading coefficient 1.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    Elem zero() const { return Elem(d_, 0); }
    Elem one() const { return from_integer(1); }
    const Elem& zeta() const { return zeta_pow_[1 % n_]; }
    const Elem& zeta_pow(std::uint64_t e) const { return zeta_pow_[e % n_]; }

    bool is_zero(const Elem& a) const {
        for (auto c : a)
            if (c != 0) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem from_integer(std::int64_t v) const {
        Elem e(d_, 0);
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        e[0] = static_cast<std::uint64_t>(r);
        return e;
    }

    /// Element with coefficient vector equal to the base-p digits of code.
    Elem element_at(std::uint64_t code) const {
        if (code >= q_)
            throw std::invalid_argument("PrimePowerField: element code out of range");
        Elem e(d_, 0);
        for (std::uint64_t i = 0; i < d_; ++i) {
            e[i] = code % p_;
            code /= p_;
        }
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem out(d_);
        for (std::uint64_t i = 0; i < d_; ++i) out[i] = (a[i] + b[i]) % p_;
        return out;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem out(d_);
        for (std::uint64_t i = 0; i < d_; ++i) out[i] = (a[i] + p_ - b[i]) % p_;
        return out;
    }
    Elem neg(const Elem& a) const {
        Elem out(d_);
        for (std::uint64_t i = 0; i < d_; ++i) out[i] = a[i] == 0 ? 0 : p_ - a[i];
        return out;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        detail::PolyP prod = detail::poly_mulmod(a, b, modulus_, p_);
        prod.resize(d_, 0);
        return prod;
    }

    Elem pow(const Elem& a, std::uint64_t e) const {
        Elem result = one(), base = a;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    /// Extended Euclid in F_p[x]; throws on zero.
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("PrimePowerField: inverse of zero");
        detail::PolyP r0 = modulus_, r1 = a, s0 = {}, s1 = {1};
        detail::poly_trim(r1);
        while (!r1.empty()) {
            // q = r0 div r1, r = r0 mod r1
            detail::PolyP q = poly_quot(r0, r1);
            detail::PolyP r = detail::poly_sub(r0, detail::poly_mul(q, r1, p_), p_);
            detail::PolyP s = detail::poly_sub(s0, detail::poly_mul(q, s1, p_), p_);
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        // r0 = gcd (a nonzero constant since modulus is irreducible)
        if (r0.size() != 1)
            throw std::domain_error("PrimePowerField: element not invertible");
        const std::uint64_t c_inv = detail::scalar_inv(r0[0], p_);
        for (auto& c : s0) c = c * c_inv % p_;
        detail::PolyP out = detail::poly_rem(std::move(s0), modulus_, p_);
        out.resize(d_, 0);
        return out;
    }

    /// sum_i values[i] * zeta^exponents[i].
    Elem zeta_weighted_sum(const std::vector<Elem>& values,
                           const std::vector<std::uint64_t>& exponents) const {
        if (values.size() != exponents.size())
            throw std::invalid_argument("zeta_weighted_sum: length mismatch");
        Elem acc = zero();
        for (std::size_t i = 0; i < values.size(); ++i)
            acc = add(acc, mul(values[i], zeta_pow_[exponents[i] % n_]));
        return acc;
    }

    /// True iff e^n = 1 and e^{n/l} != 1 for every prime l | n.
    bool has_exact_order(const Elem& e, std::uint64_t n) const {
        if (is_zero(e)) throw std::domain_error("PrimePowerField: order of zero element");
        if (!eq(pow(e, n), one())) return false;
        for (std::uint64_t l : prime_divisors(n))
            if (eq(pow(e, n / l), one())) return false;
        return true;
    }

    std::string to_string(const Elem& a) const {
        std::string s = "[";
        for (std::uint64_t i = 0; i < d_; ++i) {
            if (i) s += ',';
            s += std::to_string(a[i]);
        }
        return s + "]";
    }

    std::string describe() const {
        return "gf(" + std::to_string(p_) + "^" + std::to_string(d_) + ")";
    }

private:
    detail::PolyP poly_quot(detail::PolyP rem, const detail::PolyP& b) const {
        detail::poly_trim(rem);
        if (b.empty()) throw std::domain_error("poly_quot: division by zero");
        if (rem.size() < b.size()) return {};
        detail::PolyP q(rem.size() - b.size() + 1, 0);
        const std::uint64_t lead_inv = detail::scalar_inv(b.back(), p_);
        for (std::size_t k = q.size(); k-- > 0;) {
            const std::uint64_t c = rem[k + b.size() - 1] % p_;
            if (c == 0) continue;
            const std::uint64_t qc = c * lead_inv % p_;
            q[k] = qc;
            for (std::size_t j = 0; j < b.size(); ++j) {
                const std::uint64_t s = qc * b[j] % p_;
                rem[k + j] = (rem[k + j] + p_ - s) % p_;
            }
        }
        return q;
    }

    void find_modulus() {
        for (std::uint64_t code = 0; code < q_; ++code) {
            detail::PolyP f(d_ + 1, 0);
            std::uint64_t c = code;
            for (std::uint64_t i = 0; i < d_; ++i) {
                f[i] = c % p_;
                c /= p_;
            }
            f[d_] = 1;
            if (detail::poly_is_irreducible(f, p_)) {
                modulus_ = std::move(f);
                return;
            }
        }
        throw std::runtime_error("PrimePowerField: no irreducible modulus found");
    }

    void find_zeta() {
        const std::uint64_t cofactor = (q_ - 1) / n_;
        Elem z;
        bool found = false;
        for (std::uint64_t code = 1; code < q_; ++code) {
            Elem cand = pow(element_at(code), cofactor);
            if (is_zero(cand)) continue;
            if (has_exact_order(cand, n_)) {
                z = std::move(cand);
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("PrimePowerField: no element of exact order n");
        zeta_pow_.reserve(n_);
        Elem acc = one();
        for (std::uint64_t e = 0; e < n_; ++e) {
            zeta_pow_.push_back(acc);
            acc = mul(acc, z);
        }
    }

    std::uint64_t p_, n_, d_ = 0, q_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::vector<Elem> zeta_pow_;
};

}  // namespace snevily
