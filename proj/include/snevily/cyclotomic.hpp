#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snevily/numtheory.hpp"

namespace snevily {

namespace detail {

// Dense integer polynomials: coefficient vectors, constant term first.

using ZPoly = std::vector<mpz_class>;

inline void zpoly_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Exact division over Z; throws if any step fails to divide or a remainder is left.
inline ZPoly zpoly_exact_div(ZPoly a, const ZPoly& b) {
    zpoly_trim(a);
    if (b.empty()) throw std::domain_error("zpoly_exact_div: division by zero polynomial");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::domain_error("zpoly_exact_div: inexact division");
    ZPoly q(a.size() - b.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        const mpz_class top = a[k + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t()))
            throw std::domain_error("zpoly_exact_div: inexact division");
        const mpz_class qc = top / b.back();
        q[k] = qc;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[k + j] -= qc * b[j];
    }
    for (const auto& c : a)
        if (c != 0) throw std::domain_error("zpoly_exact_div: nonzero remainder");
    return q;
}

}  // namespace detail

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Monic, degree phi(n), computed by Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
inline std::vector<mpz_class> cyclotomic_poly(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    std::vector<detail::ZPoly> phis;
    for (std::size_t t = 0; t < divs.size(); ++t) {
        const std::uint64_t d = divs[t];
        detail::ZPoly poly(d + 1);
        poly[0] = -1;
        poly[d] = 1;
        for (std::size_t i = 0; i < t; ++i)
            if (d % divs[i] == 0)
                poly = detail::zpoly_exact_div(std::move(poly), phis[i]);
        phis.push_back(std::move(poly));
    }
    return phis.back();
}

/// Exact arithmetic in the cyclotomic field Q(zeta_n) = Q[x] / (Phi_n).
///
/// Elements are stored as an integer coefficient vector over a single positive
/// denominator, kept canonical (gcd of content and denominator is 1), which
/// keeps the hot paths in integer arithmetic. zeta is the class of x.
class CyclotomicField {
public:
    struct Elem {
        std::vector<mpz_class> num;  // length degree(), constant term first
        mpz_class den{1};            // > 0, coprime to the content of num

        bool operator==(const Elem& o) const { return den == o.den && num == o.num; }
    };

    explicit CyclotomicField(std::uint64_t n) : n_(n) {
        if (n == 0) throw std::invalid_argument("CyclotomicField: n must be positive");
        phi_ = cyclotomic_poly(n);
        deg_ = phi_.size() - 1;
        zeta_ = make_element({0, 1}, 1);
        if (n_ <= kZetaTableLimit) {
            zeta_table_.reserve(n_);
            Elem acc = one();
            for (std::uint64_t e = 0; e < n_; ++e) {
                zeta_table_.push_back(acc);
                acc = mul(acc, zeta_);
            }
        }
    }

    std::uint64_t characteristic() const { return 0; }
    std::uint64_t root_order() const { return n_; }
    std::size_t degree() const { return deg_; }
    /// Phi_n, monic, length degree()+1.
    const std::vector<mpz_class>& modulus() const { return phi_; }

    Elem zero() const {
        Elem e;
        e.num.assign(deg_, 0);
        return e;
    }
    Elem one() const { return from_integer(1); }

    Elem from_integer(std::int64_t v) const {
        Elem e = zero();
        e.num[0] = v;
        return e;
    }

    /// Element num(x)/den, reduced mod Phi_n and canonicalized.
    Elem make_element(std::vector<mpz_class> num, mpz_class den) const {
        if (den == 0) throw std::invalid_argument("CyclotomicField: zero denominator");
        if (den < 0) {
            den = -den;
            for (auto& c : num) c = -c;
        }
        Elem e;
        e.num = reduce_to_degree(std::move(num));
        e.den = std::move(den);
        normalize(e);
        return e;
    }

    Elem zeta() const { return zeta_pow(1); }
    Elem zeta_pow(std::uint64_t e) const {
        e %= n_;
        if (!zeta_table_.empty()) return zeta_table_[e];
        return pow(zeta_, e);
    }

    bool is_zero(const Elem& a) const {
        for (const auto& c : a.num)
            if (c != 0) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return add_scaled(a, b, false); }

    Elem sub(const Elem& a, const Elem& b) const { return add_scaled(a, b, true); }

    Elem neg(const Elem& a) const {
        Elem out = a;
        for (auto& c : out.num) c = -c;
        return out;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        Elem out;
        std::vector<mpz_class> conv(2 * deg_ - 1);
        for (std::size_t i = 0; i < deg_; ++i) {
            if (mpz_sgn(a.num[i].get_mpz_t()) == 0) continue;
            for (std::size_t j = 0; j < deg_; ++j) {
                if (mpz_sgn(b.num[j].get_mpz_t()) == 0) continue;
                mpz_addmul(conv[i + j].get_mpz_t(), a.num[i].get_mpz_t(),
                           b.num[j].get_mpz_t());
            }
        }
        out.num = reduce_to_degree(std::move(conv));
        out.den = a.den * b.den;
        normalize(out);
        return out;
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

    /// sum_i values[i] * zeta^exponents[i], accumulated in Z[x]/(x^n - 1)
    /// where multiplying by zeta^e is an index rotation, then reduced mod
    /// Phi_n once. Same result as the mul/add chain, far fewer big-int ops.
    Elem zeta_weighted_sum(const std::vector<Elem>& values,
                           const std::vector<std::uint64_t>& exponents) const {
        if (values.size() != exponents.size())
            throw std::invalid_argument("zeta_weighted_sum: length mismatch");
        mpz_class den = 1;
        for (const Elem& v : values)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.den.get_mpz_t());
        std::vector<mpz_class> acc(n_);
        for (std::size_t i = 0; i < values.size(); ++i) {
            const Elem& v = values[i];
            const std::uint64_t e = exponents[i] % n_;
            const mpz_class scale = den / v.den;
            const bool unscaled = scale == 1;
            for (std::size_t j = 0; j < deg_; ++j) {
                if (mpz_sgn(v.num[j].get_mpz_t()) == 0) continue;
                std::size_t pos = j + e;
                if (pos >= n_) pos -= n_;
                if (unscaled)
                    acc[pos] += v.num[j];
                else
                    mpz_addmul(acc[pos].get_mpz_t(), v.num[j].get_mpz_t(),
                               scale.get_mpz_t());
            }
        }
        Elem out;
        out.num = reduce_to_degree(std::move(acc));
        out.den = den;
        normalize(out);
        return out;
    }

    /// True iff e^n = 1 and e^{n/l} != 1 for every prime l | n.
    bool has_exact_order(const Elem& e, std::uint64_t n) const {
        if (is_zero(e)) throw std::domain_error("CyclotomicField: order of zero element");
        if (!eq(pow(e, n), one())) return false;
        for (std::uint64_t l : prime_divisors(n))
            if (eq(pow(e, n / l), one())) return false;
        return true;
    }

    /// Extended Euclid in Q[x] against Phi_n; throws on zero.
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("CyclotomicField: inverse of zero");
        using QPoly = std::vector<mpq_class>;
        const auto qtrim = [](QPoly& v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
        };
        QPoly r0(phi_.begin(), phi_.end());
        QPoly r1(a.num.begin(), a.num.end());
        qtrim(r1);
        QPoly s0, s1{1};
        while (!r1.empty()) {
            QPoly rem = r0, q;
            if (rem.size() >= r1.size()) {
                q.assign(rem.size() - r1.size() + 1, 0);
                for (std::size_t k = q.size(); k-- > 0;) {
                    const mpq_class c = rem[k + r1.size() - 1];
                    if (c == 0) continue;
                    const mpq_class qc = c / r1.back();
                    q[k] = qc;
                    for (std::size_t j = 0; j < r1.size(); ++j)
                        rem[k + j] -= qc * r1[j];
                }
            }
            qtrim(rem);
            QPoly s = s0;
            if (!q.empty() && !s1.empty()) {
                if (s.size() < q.size() + s1.size() - 1) s.resize(q.size() + s1.size() - 1, 0);
                for (std::size_t i = 0; i < q.size(); ++i) {
                    if (q[i] == 0) continue;
                    for (std::size_t j = 0; j < s1.size(); ++j)
                        s[i + j] -= q[i] * s1[j];
                }
            }
            qtrim(s);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        if (r0.size() != 1)
            throw std::domain_error("CyclotomicField: element not invertible");
        // s0 * a.num = r0[0] (mod Phi), so a^{-1} = s0 * den / r0[0]
        const mpq_class scale = mpq_class(a.den) / r0[0];
        mpz_class common_den = 1;
        std::vector<mpq_class> res(deg_, 0);
        for (std::size_t i = 0; i < s0.size(); ++i) {
            res[i] = s0[i] * scale;
            mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(),
                    res[i].get_den().get_mpz_t());
        }
        std::vector<mpz_class> num(deg_);
        for (std::size_t i = 0; i < deg_; ++i)
            num[i] = res[i].get_num() * (common_den / res[i].get_den());
        return make_element(std::move(num), common_den);
    }

    std::string to_string(const Elem& a) const {
        std::string s = "[";
        for (std::size_t i = 0; i < deg_; ++i) {
            if (i) s += ',';
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.num[i].get_mpz_t(), a.den.get_mpz_t());
            const mpz_class nn = a.num[i] / g, dd = a.den / g;
            s += nn.get_str();
            if (dd != 1) {
                s += '/';
                s += dd.get_str();
            }
        }
        return s + "]";
    }

    std::string describe() const { return "Q(zeta_" + std::to_string(n_) + ")"; }

private:
    static constexpr std::uint64_t kZetaTableLimit = 1024;

    // Common denominator by lcm keeps sums of bounded-denominator terms bounded.
    Elem add_scaled(const Elem& a, const Elem& b, bool negate_b) const {
        Elem out;
        out.num.resize(deg_);
        if (a.den == 1 && b.den == 1) {
            for (std::size_t i = 0; i < deg_; ++i) {
                if (negate_b)
                    out.num[i] = a.num[i] - b.num[i];
                else
                    out.num[i] = a.num[i] + b.num[i];
            }
            out.den = 1;
            return out;
        }
        mpz_class den;
        mpz_lcm(den.get_mpz_t(), a.den.get_mpz_t(), b.den.get_mpz_t());
        const mpz_class sa = den / a.den, sb = den / b.den;
        for (std::size_t i = 0; i < deg_; ++i) {
            if (negate_b)
                out.num[i] = a.num[i] * sa - b.num[i] * sb;
            else
                out.num[i] = a.num[i] * sa + b.num[i] * sb;
        }
        out.den = den;
        normalize(out);
        return out;
    }

    std::vector<mpz_class> reduce_to_degree(std::vector<mpz_class> a) const {
        for (std::size_t i = a.size(); i-- > deg_;) {
            if (a[i] == 0) continue;
            const mpz_class c = a[i];
            for (std::size_t j = 0; j < deg_; ++j)
                a[i - deg_ + j] -= c * phi_[j];
            a[i] = 0;
        }
        a.resize(deg_);
        return a;
    }

    void normalize(Elem& e) const {
        mpz_class g = e.den;
        for (const auto& c : e.num) {
            if (g == 1) break;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        }
        if (g > 1) {
            for (auto& c : e.num) c /= g;
            e.den /= g;
        }
    }

    std::uint64_t n_;
    std::size_t deg_ = 0;
    std::vector<mpz_class> phi_;
    Elem zeta_;
    std::vector<Elem> zeta_table_;
};

}  // namespace snevily
