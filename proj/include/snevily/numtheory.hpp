#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace snevily {

/// Trial-division primality; intended for desk-scale inputs.
inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::uint64_t d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

/// Distinct prime divisors by trial division, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 0) throw std::invalid_argument("pow_mod: zero modulus");
    if (mod == 1) return 0;
    unsigned __int128 result = 1, b = base % mod;
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

/// Least d >= 1 with a^d = 1 (mod n). Requires gcd(a, n) = 1. ord(., 1) = 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("multiplicative_order: zero modulus");
    if (n == 1) return 1;
    a %= n;
    if (std::gcd(a, n) != 1)
        throw std::invalid_argument("multiplicative_order: base not coprime to modulus");
    std::uint64_t acc = a % n, d = 1;
    while (acc != 1) {
        acc = static_cast<std::uint64_t>((unsigned __int128)acc * a % n);
        ++d;
    }
    return d;
}

namespace detail {

/// Visits the k-subsets of {0..n-1} as sorted index vectors in lexicographic
/// order. fn returns false to stop early.
template <typename Fn>
void for_each_k_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!fn(std::as_const(idx))) return;
        std::size_t i = k;
        while (i-- > 0)
            if (idx[i] < n - k + i) break;
        if (i == static_cast<std::size_t>(-1)) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// C(n, k), capped: returns cap + 1 as soon as the count exceeds cap.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace snevily
