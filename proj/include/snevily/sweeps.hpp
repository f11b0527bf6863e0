#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snevily/io.hpp"
#include "snevily/matroid.hpp"
#include "snevily/random.hpp"
#include "snevily/snevily.hpp"

namespace snevily {

/// Every moduli list (factors >= 2) with product <= max_m, ordered by group
/// order and then lexicographically. Reordered factor lists are distinct specs.
inline std::vector<std::vector<std::uint64_t>> all_moduli_lists(std::uint64_t max_m) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> cur;
    const auto recurse = [&](auto&& self, std::uint64_t rest) -> void {
        for (std::uint64_t f = 2; f <= rest; ++f) {
            if (rest % f != 0) continue;
            cur.push_back(f);
            if (rest == f)
                out.push_back(cur);
            else
                self(self, rest / f);
            cur.pop_back();
        }
    };
    for (std::uint64_t m = 2; m <= max_m; ++m) recurse(recurse, m);
    return out;
}

/// The `count` smallest primes not dividing n (admissible finite characteristics).
inline std::vector<std::uint64_t> admissible_primes(std::uint64_t n, std::size_t count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; out.size() < count; ++p)
        if (is_prime(p) && n % p != 0) out.push_back(p);
    return out;
}

struct SweepOptions {
    std::uint64_t max_m = 9;        // exhaustive phase: group order bound
    std::uint64_t max_k = 3;        // exhaustive phase: subset size bound
    std::uint64_t trials = 0;       // random phase instance count
    std::uint64_t rand_max_m = 36;  // random phase: group order bound
    std::uint64_t rand_max_k = 5;   // random phase: subset size bound
    std::uint64_t seed = 0;
    std::uint64_t max_subsets = 1000000;
    unsigned max_perm_k = 8;
};

struct SweepReport {
    std::string suite;
    std::vector<std::string> lines;  // canonical order: instance-key sorted
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;

    bool ok() const { return violations == 0; }

    std::string summary() const {
        return "suite=" + suite + " instances=" + std::to_string(instances) +
               " violations=" + std::to_string(violations);
    }
};

namespace detail {

/// All k-subsets of G in lexicographic index order, as element vectors.
inline std::vector<std::vector<GroupElement>> all_k_subsets(const GroupSpec& spec,
                                                            std::size_t k) {
    std::vector<std::vector<GroupElement>> out;
    for_each_k_subset(static_cast<std::size_t>(spec.order()), k,
                      [&](const std::vector<std::size_t>& idx) {
                          std::vector<GroupElement> set;
                          set.reserve(k);
                          for (std::size_t i : idx)
                              set.push_back(spec.element_at(i));
                          out.push_back(std::move(set));
                          return true;
                      });
    return out;
}

inline std::string instance_key(const GroupSpec& spec, const std::vector<GroupElement>& a,
                                const std::vector<GroupElement>& b) {
    return "group=" + format_group_spec(spec) + " A=" + format_element_list(a) +
           " B=" + format_element_list(b);
}

}  // namespace detail

/// Distinguished-permutation + polynomial sweep: for every pair of k-subsets the
/// constructed permutation's signature is attained exactly once, its
/// polynomial coefficient is +-1, and that coefficient survives reduction mod
/// 2, 3 and 5.
inline SweepReport sweep_lemma4(const SweepOptions& opts) {
    SweepReport rep;
    rep.suite = "lemma4";
    for (const auto& moduli : all_moduli_lists(opts.max_m)) {
        const GroupSpec spec(moduli);
        for (std::size_t k = 1; k <= opts.max_k && k <= spec.order(); ++k) {
            const auto subsets = detail::all_k_subsets(spec, k);
            std::uint64_t pairs = 0, violations = 0;
            for (const auto& a : subsets) {
                for (const auto& b : subsets) {
                    ++pairs;
                    const Permutation pi = lemma4_permutation(spec, a, b);
                    const MultisetSignature sig = multiset_signature(spec, a, b, pi);
                    const std::uint64_t cnt =
                        count_attaining(spec, a, b, sig, opts.max_perm_k);
                    if (cnt != 1) {
                        ++violations;
                        rep.lines.push_back("FAIL lemma4 " + detail::instance_key(spec, a, b) +
                                            " count=" + std::to_string(cnt));
                        continue;
                    }
                    const SnevilyPolynomial poly =
                        snevily_polynomial(spec, a, b, opts.max_perm_k);
                    const auto it = poly.coeff.find(sig);
                    if (it == poly.coeff.end() || (it->second != 1 && it->second != -1)) {
                        ++violations;
                        rep.lines.push_back("FAIL poly " + detail::instance_key(spec, a, b) +
                                            " reason=lemma4-coefficient-not-unit");
                        continue;
                    }
                    for (std::uint64_t c : {2ULL, 3ULL, 5ULL}) {
                        const SnevilyPolynomial red = reduce_mod_char(poly, c);
                        if (red.coeff.find(sig) == red.coeff.end()) {
                            ++violations;
                            rep.lines.push_back(
                                "FAIL poly " + detail::instance_key(spec, a, b) +
                                " reason=coefficient-vanishes-mod-" + std::to_string(c));
                        }
                    }
                }
            }
            rep.instances += pairs;
            rep.violations += violations;
            rep.lines.push_back("group=" + format_group_spec(spec) + " k=" +
                                std::to_string(k) + " pairs=" + std::to_string(pairs) +
                                " violations=" + std::to_string(violations));
        }
    }
    return rep;
}

namespace detail {

template <FieldContext F>
std::uint64_t theorem1_scope(const F& f, const GroupSpec& spec,
                             const std::vector<std::vector<GroupElement>>& subsets,
                             SweepReport& rep) {
    std::uint64_t violations = 0;
    std::vector<LinearMatroid<F>> matroids;
    matroids.reserve(subsets.size());
    for (const auto& s : subsets) matroids.push_back(subset_matroid(f, spec, s));
    for (std::size_t ai = 0; ai < subsets.size(); ++ai) {
        for (std::size_t bi = 0; bi < subsets.size(); ++bi) {
            ++rep.instances;
            const auto basis = common_basis(matroids[ai], matroids[bi]);
            bool good = basis.has_value();
            if (good) {
                std::vector<Character> chars;
                chars.reserve(basis->size());
                for (std::size_t u : *basis) chars.push_back(spec.element_at(u));
                good = verify_theorem1_witness(f, spec, subsets[ai], subsets[bi], chars);
            }
            if (!good) {
                ++violations;
                rep.lines.push_back(
                    "FAIL theorem1 field=" + f.describe() + " " +
                    instance_key(spec, subsets[ai], subsets[bi]) +
                    (basis ? " reason=witness-not-verified" : " reason=infeasible"));
            }
        }
    }
    return violations;
}

template <FieldContext F>
bool theorem1_random_instance(const F& f, const GroupSpec& spec,
                              const std::vector<GroupElement>& a,
                              const std::vector<GroupElement>& b, SweepReport& rep) {
    const auto witness = theorem1_witness(f, spec, a, b);
    bool good = witness.has_value();
    if (good) good = verify_theorem1_witness(f, spec, a, b, witness->chars);
    if (!good) {
        rep.lines.push_back("FAIL theorem1-random field=" + f.describe() + " " +
                            instance_key(spec, a, b) +
                            (witness ? " reason=witness-not-verified" : " reason=infeasible"));
    }
    return good;
}

}  // namespace detail

/// Exhaustive pairs over small groups in two finite characteristics plus the
/// cyclotomic field, then random instances: common_basis must always succeed
/// and the witness must re-verify.
inline SweepReport sweep_theorem1(const SweepOptions& opts) {
    SweepReport rep;
    rep.suite = "theorem1";
    for (const auto& moduli : all_moduli_lists(opts.max_m)) {
        const GroupSpec spec(moduli);
        const auto primes = admissible_primes(spec.exponent(), 2);
        for (std::size_t k = 1; k <= opts.max_k && k <= spec.order(); ++k) {
            const auto subsets = detail::all_k_subsets(spec, k);
            for (std::uint64_t p : primes) {
                const PrimePowerField f(p, spec.exponent());
                const std::uint64_t v =
                    detail::theorem1_scope(f, spec, subsets, rep);
                rep.violations += v;
                rep.lines.push_back("group=" + format_group_spec(spec) +
                                    " k=" + std::to_string(k) + " field=" + f.describe() +
                                    " pairs=" + std::to_string(subsets.size() * subsets.size()) +
                                    " violations=" + std::to_string(v));
            }
            const CyclotomicField f(spec.exponent());
            const std::uint64_t v =
                detail::theorem1_scope(f, spec, subsets, rep);
            rep.violations += v;
            rep.lines.push_back("group=" + format_group_spec(spec) +
                                " k=" + std::to_string(k) + " field=" + f.describe() +
                                " pairs=" + std::to_string(subsets.size() * subsets.size()) +
                                " violations=" + std::to_string(v));
        }
    }

    if (opts.trials > 0) {
        SplitMix64 rng(opts.seed);
        const auto specs = all_moduli_lists(opts.rand_max_m);
        std::uint64_t v = 0;
        for (std::uint64_t t = 0; t < opts.trials; ++t) {
            const GroupSpec spec(specs[rng.below(specs.size())]);
            const std::size_t k = 1 + static_cast<std::size_t>(rng.below(
                                          std::min<std::uint64_t>(opts.rand_max_k, spec.order())));
            const auto a = random_subset(rng, spec, k);
            const auto b = random_subset(rng, spec, k);
            const std::uint64_t pick = rng.below(3);
            bool good;
            if (pick < 2) {
                const PrimePowerField f(admissible_primes(spec.exponent(), 2)[pick],
                                        spec.exponent());
                good = detail::theorem1_random_instance(f, spec, a, b, rep);
            } else {
                const CyclotomicField f(spec.exponent());
                good = detail::theorem1_random_instance(f, spec, a, b, rep);
            }
            ++rep.instances;
            if (!good) ++v;
        }
        rep.violations += v;
        rep.lines.push_back("random trials=" + std::to_string(opts.trials) +
                            " seed=" + std::to_string(opts.seed) +
                            " violations=" + std::to_string(v));
    }
    return rep;
}

/// Odd-order exhaustive pairs plus random odd-order instances: the distinct-sums
/// permutation always exists; each returned permutation is independently checked.
inline SweepReport sweep_theorem3(const SweepOptions& opts) {
    SweepReport rep;
    rep.suite = "theorem3";
    for (const auto& moduli : all_moduli_lists(opts.max_m)) {
        const GroupSpec spec(moduli);
        if (spec.order() % 2 == 0) continue;
        for (std::size_t k = 1; k <= opts.max_k && k <= spec.order(); ++k) {
            const auto subsets = detail::all_k_subsets(spec, k);
            std::uint64_t pairs = 0, violations = 0;
            for (const auto& a : subsets) {
                for (const auto& b : subsets) {
                    ++pairs;
                    const auto pi = find_snevily_permutation(spec, a, b);
                    bool good = pi.has_value();
                    if (good) {
                        MultisetSignature sig = multiset_signature(spec, a, b, *pi);
                        good = std::adjacent_find(sig.begin(), sig.end()) == sig.end();
                    }
                    if (!good) {
                        ++violations;
                        rep.lines.push_back("FAIL theorem3 " +
                                            detail::instance_key(spec, a, b) +
                                            (pi ? " reason=sums-not-distinct"
                                                : " reason=none-returned"));
                    }
                }
            }
            rep.instances += pairs;
            rep.violations += violations;
            rep.lines.push_back("group=" + format_group_spec(spec) + " k=" +
                                std::to_string(k) + " pairs=" + std::to_string(pairs) +
                                " violations=" + std::to_string(violations));
        }
    }

    if (opts.trials > 0) {
        SplitMix64 rng(opts.seed);
        std::vector<std::vector<std::uint64_t>> odd_specs;
        for (auto& moduli : all_moduli_lists(opts.rand_max_m)) {
            std::uint64_t order = 1;
            for (std::uint64_t f : moduli) order *= f;
            if (order % 2 == 1) odd_specs.push_back(std::move(moduli));
        }
        std::uint64_t v = 0;
        for (std::uint64_t t = 0; t < opts.trials; ++t) {
            const GroupSpec spec(odd_specs[rng.below(odd_specs.size())]);
            const std::size_t k = 1 + static_cast<std::size_t>(rng.below(
                                          std::min<std::uint64_t>(opts.rand_max_k, spec.order())));
            const auto a = random_subset(rng, spec, k);
            const auto b = random_subset(rng, spec, k);
            const auto pi = find_snevily_permutation(spec, a, b);
            bool good = pi.has_value();
            if (good) {
                MultisetSignature sig = multiset_signature(spec, a, b, *pi);
                good = std::adjacent_find(sig.begin(), sig.end()) == sig.end();
            }
            ++rep.instances;
            if (!good) {
                ++v;
                rep.lines.push_back("FAIL theorem3-random " + detail::instance_key(spec, a, b) +
                                    (pi ? " reason=sums-not-distinct" : " reason=none-returned"));
            }
        }
        rep.violations += v;
        rep.lines.push_back("random trials=" + std::to_string(opts.trials) +
                            " seed=" + std::to_string(opts.seed) +
                            " violations=" + std::to_string(v));
    }
    return rep;
}

namespace detail {

/// Odd-exponent specs with order <= max_m (ones representable in characteristic 2).
inline std::vector<std::vector<std::uint64_t>> odd_exponent_specs(std::uint64_t max_m) {
    std::vector<std::vector<std::uint64_t>> out;
    for (auto& moduli : all_moduli_lists(max_m)) {
        bool odd = true;
        for (std::uint64_t f : moduli)
            if (f % 2 == 0) odd = false;
        if (odd) out.push_back(std::move(moduli));
    }
    return out;
}

}  // namespace detail

/// Random Cauchy-Binet identity instances over characteristic-2 and
/// cyclotomic contexts.
inline SweepReport sweep_cauchy_binet(const SweepOptions& opts) {
    SweepReport rep;
    rep.suite = "cauchy-binet";
    SplitMix64 rng(opts.seed);
    const auto specs = detail::odd_exponent_specs(opts.max_m);
    std::uint64_t v = 0;
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
        const GroupSpec spec(specs[rng.below(specs.size())]);
        const std::size_t k = 1 + static_cast<std::size_t>(
                                      rng.below(std::min<std::uint64_t>(opts.max_k, spec.order())));
        const auto a = random_subset(rng, spec, k);
        const auto b = random_subset(rng, spec, k);
        bool good;
        std::string field_name;
        if (rng.below(2) == 0) {
            const PrimePowerField f(2, spec.exponent());
            field_name = f.describe();
            const auto phi = random_group_function(f, spec, rng);
            good = cauchy_binet_check(f, spec, a, b, phi, opts.max_subsets);
        } else {
            const CyclotomicField f(spec.exponent());
            field_name = f.describe();
            const auto phi = random_group_function(f, spec, rng);
            good = cauchy_binet_check(f, spec, a, b, phi, opts.max_subsets);
        }
        ++rep.instances;
        if (!good) {
            ++v;
            rep.lines.push_back("FAIL cauchy-binet field=" + field_name + " " +
                                detail::instance_key(spec, a, b));
        }
    }
    rep.violations += v;
    rep.lines.push_back("trials=" + std::to_string(opts.trials) +
                        " seed=" + std::to_string(opts.seed) +
                        " violations=" + std::to_string(v));
    return rep;
}

/// Random characteristic-2 expansion-identity instances.
inline SweepReport sweep_char2(const SweepOptions& opts) {
    SweepReport rep;
    rep.suite = "char2";
    SplitMix64 rng(opts.seed);
    const auto specs = detail::odd_exponent_specs(opts.max_m);
    std::uint64_t v = 0;
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
        const GroupSpec spec(specs[rng.below(specs.size())]);
        const std::size_t k = 1 + static_cast<std::size_t>(
                                      rng.below(std::min<std::uint64_t>(opts.max_k, spec.order())));
        const auto a = random_subset(rng, spec, k);
        const auto b = random_subset(rng, spec, k);
        const PrimePowerField f(2, spec.exponent());
        const auto phi = random_group_function(f, spec, rng);
        const bool good = char2_identity_check(f, spec, a, b, phi, opts.max_subsets);
        ++rep.instances;
        if (!good) {
            ++v;
            rep.lines.push_back("FAIL char2 field=" + f.describe() + " " +
                                detail::instance_key(spec, a, b));
        }
    }
    rep.violations += v;
    rep.lines.push_back("trials=" + std::to_string(opts.trials) +
                        " seed=" + std::to_string(opts.seed) +
                        " violations=" + std::to_string(v));
    return rep;
}

/// Both determinant-identity sweeps under one suite name.
inline SweepReport sweep_identities(const SweepOptions& opts) {
    SweepReport rep;
    rep.suite = "identities";
    const SweepReport cb = sweep_cauchy_binet(opts);
    const SweepReport c2 = sweep_char2(opts);
    for (const auto& l : cb.lines) rep.lines.push_back("cauchy-binet " + l);
    for (const auto& l : c2.lines) rep.lines.push_back("char2 " + l);
    rep.instances = cb.instances + c2.instances;
    rep.violations = cb.violations + c2.violations;
    return rep;
}

/// Solver-vs-oracle agreement on random instances, including the returned
/// basis being independently checked in both matroids.
inline SweepReport sweep_solver_oracle(const SweepOptions& opts) {
    SweepReport rep;
    rep.suite = "solver-oracle";
    SplitMix64 rng(opts.seed);
    const auto specs = all_moduli_lists(opts.max_m);
    std::uint64_t v = 0;
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
        const GroupSpec spec(specs[rng.below(specs.size())]);
        const std::size_t k = 1 + static_cast<std::size_t>(
                                      rng.below(std::min<std::uint64_t>(opts.max_k, spec.order())));
        const auto a = random_subset(rng, spec, k);
        const auto b = random_subset(rng, spec, k);
        const std::uint64_t pick = rng.below(3);
        bool good = true;
        std::string field_name;
        const auto run = [&](const auto& f) {
            field_name = f.describe();
            const auto ma = subset_matroid(f, spec, a);
            const auto mb = subset_matroid(f, spec, b);
            const auto fast = common_basis(ma, mb);
            const auto slow = brute_force_common_basis(ma, mb, opts.max_subsets);
            if (fast.has_value() != slow.has_value()) {
                good = false;
                return;
            }
            if (fast)
                good = is_independent(ma, *fast) && is_independent(mb, *fast);
        };
        if (pick < 2) {
            const PrimePowerField f(admissible_primes(spec.exponent(), 2)[pick],
                                    spec.exponent());
            run(f);
        } else {
            const CyclotomicField f(spec.exponent());
            run(f);
        }
        ++rep.instances;
        if (!good) {
            ++v;
            rep.lines.push_back("FAIL solver-oracle field=" + field_name + " " +
                                detail::instance_key(spec, a, b));
        }
    }
    rep.violations += v;
    rep.lines.push_back("trials=" + std::to_string(opts.trials) +
                        " seed=" + std::to_string(opts.seed) +
                        " violations=" + std::to_string(v));
    return rep;
}

}  // namespace snevily
