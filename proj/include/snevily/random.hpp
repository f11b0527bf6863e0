#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "snevily/characters.hpp"
#include "snevily/cyclotomic.hpp"
#include "snevily/finite_field.hpp"

namespace snevily {

/// splitmix64; output is platform- and implementation-independent, which keeps
/// seeded sweeps byte-reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("SplitMix64: zero bound");
        return next() % bound;
    }

private:
    std::uint64_t state_;
};

/// k distinct indices from [0, m), ascending (partial Fisher-Yates).
inline std::vector<std::uint64_t> random_subset_indices(SplitMix64& rng, std::uint64_t m,
                                                        std::size_t k) {
    if (k > m) throw std::invalid_argument("random_subset_indices: k exceeds m");
    std::vector<std::uint64_t> pool(m);
    for (std::uint64_t i = 0; i < m; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t j = i + rng.below(m - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

inline std::vector<GroupElement> random_subset(SplitMix64& rng, const GroupSpec& spec,
                                               std::size_t k) {
    std::vector<GroupElement> out;
    out.reserve(k);
    for (std::uint64_t idx : random_subset_indices(rng, spec.order(), k))
        out.push_back(spec.element_at(idx));
    return out;
}

inline PrimePowerField::Elem random_element(const PrimePowerField& f, SplitMix64& rng) {
    return f.element_at(rng.below(f.field_size()));
}

/// Small random numerators over a small denominator; exactness is unaffected.
inline CyclotomicField::Elem random_element(const CyclotomicField& f, SplitMix64& rng) {
    std::vector<mpz_class> num(f.degree());
    for (auto& c : num)
        c = static_cast<long>(rng.below(21)) - 10;
    return f.make_element(std::move(num), static_cast<long>(rng.below(4)) + 1);
}

template <typename F>
GroupFunction<F> random_group_function(const F& f, const GroupSpec& spec, SplitMix64& rng) {
    GroupFunction<F> phi;
    phi.reserve(spec.order());
    for (std::uint64_t i = 0; i < spec.order(); ++i) phi.push_back(random_element(f, rng));
    return phi;
}

}  // namespace snevily
