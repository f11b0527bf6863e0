#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "snevily/characters.hpp"
#include "snevily/group.hpp"
#include "snevily/linalg.hpp"
#include "snevily/matroid.hpp"
#include "snevily/numtheory.hpp"

namespace snevily {

struct Permutation {
    std::vector<std::size_t> map;  // one-line form: map[i] is the image of i

    std::size_t size() const { return map.size(); }

    static Permutation identity(std::size_t k) {
        Permutation p;
        p.map.resize(k);
        for (std::size_t i = 0; i < k; ++i) p.map[i] = i;
        return p;
    }

    bool is_bijection() const {
        std::vector<char> seen(map.size(), 0);
        for (std::size_t v : map) {
            if (v >= map.size() || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }

    /// +1 for even, -1 for odd, by inversion count.
    int sign() const {
        int s = 1;
        for (std::size_t i = 0; i < map.size(); ++i)
            for (std::size_t j = i + 1; j < map.size(); ++j)
                if (map[i] > map[j]) s = -s;
        return s;
    }

    bool operator==(const Permutation&) const = default;
};

/// Sorted indices (via index_of) of the multiset {a_i + b_{sigma(i)}}.
using MultisetSignature = std::vector<std::uint64_t>;

/// Det L over the transcendental extension F(t_1,...,t_m) for phi(g_i) = t_i:
/// an alternating sum of k! degree-k monomials, bucketed by multiset
/// signature with signed integer coefficients.
struct SnevilyPolynomial {
    std::map<MultisetSignature, std::int64_t> coeff;

    bool operator==(const SnevilyPolynomial&) const = default;
};

namespace detail {

inline void require_set(const GroupSpec& spec, const std::vector<GroupElement>& s,
                        const char* what) {
    std::vector<std::uint64_t> idx;
    idx.reserve(s.size());
    for (const auto& e : s) idx.push_back(spec.index_of(e));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw std::invalid_argument(std::string(what) + ": duplicate elements");
}

/// k x k table of index_of(a_i + b_j); validates that A and B are equal-size
/// nonempty duplicate-free sets.
inline std::vector<std::vector<std::uint64_t>> sum_index_table(
    const GroupSpec& spec, const std::vector<GroupElement>& a,
    const std::vector<GroupElement>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("sum_index_table: set sizes differ");
    if (a.empty()) throw std::invalid_argument("sum_index_table: empty sets");
    require_set(spec, a, "set A");
    require_set(spec, b, "set B");
    const std::size_t k = a.size();
    std::vector<std::vector<std::uint64_t>> sums(k, std::vector<std::uint64_t>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            sums[i][j] = spec.index_of(spec.add(a[i], b[j]));
    return sums;
}

}  // namespace detail

inline MultisetSignature multiset_signature(const GroupSpec& spec,
                                            const std::vector<GroupElement>& a,
                                            const std::vector<GroupElement>& b,
                                            const Permutation& sigma) {
    const auto sums = detail::sum_index_table(spec, a, b);
    if (sigma.size() != a.size() || !sigma.is_bijection())
        throw std::invalid_argument("multiset_signature: sigma is not a permutation of the right size");
    MultisetSignature sig(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) sig[i] = sums[i][sigma.map[i]];
    std::sort(sig.begin(), sig.end());
    return sig;
}

/// The pivot-and-recurse construction: repeatedly take g = (first unmatched a)
/// + (first unmatched b), match every unmatched i whose partner j with
/// a_i + b_j = g is still unmatched (that partner is unique), and continue on
/// the rest. The returned permutation is the only one attaining its multiset
/// signature.
inline Permutation lemma4_permutation(const GroupSpec& spec,
                                      const std::vector<GroupElement>& a,
                                      const std::vector<GroupElement>& b) {
    const auto sums = detail::sum_index_table(spec, a, b);
    const std::size_t k = a.size();
    std::vector<char> a_done(k, 0), b_done(k, 0);
    Permutation pi;
    pi.map.assign(k, 0);
    std::size_t remaining = k;
    while (remaining > 0) {
        std::size_t ia = 0, jb = 0;
        while (a_done[ia]) ++ia;
        while (b_done[jb]) ++jb;
        const std::uint64_t g = sums[ia][jb];
        for (std::size_t i = 0; i < k; ++i) {
            if (a_done[i]) continue;
            for (std::size_t j = 0; j < k; ++j) {
                if (b_done[j] || sums[i][j] != g) continue;
                pi.map[i] = j;
                a_done[i] = 1;
                b_done[j] = 1;
                --remaining;
                break;
            }
        }
    }
    return pi;
}

/// Number of permutations sigma with multiset_signature(sigma) = target,
/// counted by backtracking with multiplicity bookkeeping.
inline std::uint64_t count_attaining(const GroupSpec& spec,
                                     const std::vector<GroupElement>& a,
                                     const std::vector<GroupElement>& b,
                                     const MultisetSignature& target,
                                     unsigned max_k = 8) {
    const auto sums = detail::sum_index_table(spec, a, b);
    const std::size_t k = a.size();
    if (k > max_k) throw std::runtime_error("count_attaining: permutation bound exceeded");
    if (target.size() != k) return 0;
    std::map<std::uint64_t, std::size_t> need;
    for (std::uint64_t s : target) ++need[s];
    std::vector<char> used(k, 0);
    std::uint64_t count = 0;
    const auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
            ++count;
            return;
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (used[j]) continue;
            const auto it = need.find(sums[i][j]);
            if (it == need.end() || it->second == 0) continue;
            --it->second;
            used[j] = 1;
            self(self, i + 1);
            used[j] = 0;
            ++it->second;
        }
    };
    recurse(recurse, 0);
    return count;
}

/// Enumerates all k! permutations and accumulates signs per signature; zero
/// coefficients are dropped.
inline SnevilyPolynomial snevily_polynomial(const GroupSpec& spec,
                                            const std::vector<GroupElement>& a,
                                            const std::vector<GroupElement>& b,
                                            unsigned max_k = 8) {
    const auto sums = detail::sum_index_table(spec, a, b);
    const std::size_t k = a.size();
    if (k > max_k)
        throw std::runtime_error("snevily_polynomial: permutation bound exceeded");
    SnevilyPolynomial poly;
    Permutation perm = Permutation::identity(k);
    MultisetSignature sig(k);
    do {
        for (std::size_t i = 0; i < k; ++i) sig[i] = sums[i][perm.map[i]];
        std::sort(sig.begin(), sig.end());
        poly.coeff[sig] += perm.sign();
    } while (std::next_permutation(perm.map.begin(), perm.map.end()));
    for (auto it = poly.coeff.begin(); it != poly.coeff.end();)
        it = it->second == 0 ? poly.coeff.erase(it) : std::next(it);
    return poly;
}

/// Coefficients reduced into [0, c); c = 0 leaves the polynomial unchanged.
inline SnevilyPolynomial reduce_mod_char(const SnevilyPolynomial& poly, std::uint64_t c) {
    if (c == 0) return poly;
    if (!is_prime(c))
        throw std::invalid_argument("reduce_mod_char: characteristic must be 0 or prime");
    SnevilyPolynomial out;
    for (const auto& [sig, co] : poly.coeff) {
        std::int64_t r = co % static_cast<std::int64_t>(c);
        if (r < 0) r += static_cast<std::int64_t>(c);
        if (r != 0) out.coeff[sig] = r;
    }
    return out;
}

/// Exhaustive backtracking for a permutation with pairwise distinct sums
/// a_i + b_{pi(i)}; most-constrained index first, candidates in ascending
/// order. Returns nullopt only if no such permutation exists.
inline std::optional<Permutation> find_snevily_permutation(
    const GroupSpec& spec, const std::vector<GroupElement>& a,
    const std::vector<GroupElement>& b) {
    const auto sums = detail::sum_index_table(spec, a, b);
    const std::size_t k = a.size();
    std::vector<char> used_b(k, 0), assigned(k, 0);
    std::vector<char> used_sum(spec.order(), 0);
    Permutation pi;
    pi.map.assign(k, 0);
    const auto recurse = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == k) return true;
        std::size_t best = k, best_count = k + 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (assigned[i]) continue;
            std::size_t cnt = 0;
            for (std::size_t j = 0; j < k; ++j)
                if (!used_b[j] && !used_sum[sums[i][j]]) ++cnt;
            if (cnt < best_count) {
                best = i;
                best_count = cnt;
            }
        }
        if (best_count == 0) return false;
        const std::size_t i = best;
        assigned[i] = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (used_b[j] || used_sum[sums[i][j]]) continue;
            used_b[j] = 1;
            used_sum[sums[i][j]] = 1;
            pi.map[i] = j;
            if (self(self, depth + 1)) return true;
            used_b[j] = 0;
            used_sum[sums[i][j]] = 0;
        }
        assigned[i] = 0;
        return false;
    };
    if (recurse(recurse, 0)) return pi;
    return std::nullopt;
}

/// L[i][j] = phi(a_i + b_j).
template <FieldContext F>
Matrix<F> phi_sum_matrix(const F& f, const GroupSpec& spec,
                         const std::vector<GroupElement>& a,
                         const std::vector<GroupElement>& b,
                         const GroupFunction<F>& phi) {
    require_compatible(f, spec);
    if (phi.size() != spec.order())
        throw std::invalid_argument("phi_sum_matrix: phi must be total on G");
    const auto sums = detail::sum_index_table(spec, a, b);
    const std::size_t k = a.size();
    Matrix<F> L = make_matrix(f, k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            L.at(i, j) = phi[sums[i][j]];
    return L;
}

/// Ring homomorphism t_i -> phi(g_i) applied to the polynomial; equals
/// determinant(phi_sum_matrix) for the generating instance.
template <FieldContext F>
typename F::Elem specialize(const F& f, const SnevilyPolynomial& poly,
                            const GroupFunction<F>& phi) {
    typename F::Elem acc = f.zero();
    for (const auto& [sig, co] : poly.coeff) {
        typename F::Elem term = f.from_integer(co);
        for (std::uint64_t idx : sig) {
            if (idx >= phi.size())
                throw std::invalid_argument("specialize: signature index outside phi");
            term = f.mul(term, phi[idx]);
        }
        acc = f.add(acc, term);
    }
    return acc;
}

/// Checks Det L = sum over k-subsets of (prod lambda) Det(chi(a)) Det(chi(b)),
/// and the factorization L = M N^T behind it.
template <FieldContext F>
bool cauchy_binet_check(const F& f, const GroupSpec& spec,
                        const std::vector<GroupElement>& a,
                        const std::vector<GroupElement>& b, const GroupFunction<F>& phi,
                        std::uint64_t max_subsets = 1000000) {
    require_compatible(f, spec);
    const std::size_t k = a.size();
    const std::uint64_t m = spec.order();
    if (k > m) throw std::invalid_argument("cauchy_binet_check: k exceeds group order");
    if (binomial_capped(m, k, max_subsets) > max_subsets)
        throw std::runtime_error("cauchy_binet_check: subset budget exceeded");

    const Matrix<F> L = phi_sum_matrix(f, spec, a, b, phi);
    const typename F::Elem lhs = determinant(f, L);
    const FourierData<F> fd = fourier_coefficients(f, spec, phi);

    // Factorization step: M[i][u] = lambda_u chi_u(a_i), N[i][u] = chi_u(b_i).
    Matrix<F> mm = make_matrix(f, k, m);
    Matrix<F> nn = make_matrix(f, k, m);
    for (std::uint64_t u = 0; u < m; ++u) {
        const Character cu = spec.element_at(u);
        for (std::size_t i = 0; i < k; ++i) {
            mm.at(i, u) = f.mul(fd.lambda[u], f.zeta_pow(pairing_exponent(spec, cu, a[i])));
            nn.at(i, u) = f.zeta_pow(pairing_exponent(spec, cu, b[i]));
        }
    }
    const Matrix<F> prod = matmul(f, mm, transpose(nn));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!f.eq(prod.at(i, j), L.at(i, j))) return false;

    typename F::Elem rhs = f.zero();
    detail::for_each_k_subset(m, k, [&](const std::vector<std::size_t>& us) {
        typename F::Elem coeff = f.one();
        bool zero = false;
        for (std::size_t u : us) {
            if (f.is_zero(fd.lambda[u])) {
                zero = true;
                break;
            }
            coeff = f.mul(coeff, fd.lambda[u]);
        }
        if (zero) return true;
        std::vector<Character> chars;
        chars.reserve(k);
        for (std::size_t u : us) chars.push_back(spec.element_at(u));
        const typename F::Elem da = determinant(f, char_matrix(f, spec, chars, a));
        if (f.is_zero(da)) return true;
        const typename F::Elem db = determinant(f, char_matrix(f, spec, chars, b));
        rhs = f.add(rhs, f.mul(coeff, f.mul(da, db)));
        return true;
    });
    return f.eq(lhs, rhs);
}

/// Characteristic-2 expansion: Det(phi(a_i+b_j)) as a double sum over
/// k-subsets of characters and permutations pi, with inner matrices
/// (lambda_{u_j} chi_{u_j}(a_i + b_{pi(i)}))_{i,j}. Both sides computed
/// independently.
template <FieldContext F>
bool char2_identity_check(const F& f, const GroupSpec& spec,
                          const std::vector<GroupElement>& a,
                          const std::vector<GroupElement>& b, const GroupFunction<F>& phi,
                          std::uint64_t max_subsets = 1000000) {
    require_compatible(f, spec);
    if (f.characteristic() != 2)
        throw std::invalid_argument("char2_identity_check: field characteristic must be 2");
    const auto sums = detail::sum_index_table(spec, a, b);
    const std::size_t k = a.size();
    const std::uint64_t m = spec.order();
    if (k > m) throw std::invalid_argument("char2_identity_check: k exceeds group order");
    std::uint64_t fact = 1;
    for (std::size_t i = 2; i <= k && fact <= max_subsets; ++i) fact *= i;
    if (fact > max_subsets ||
        binomial_capped(m, k, max_subsets / fact) > max_subsets / fact)
        throw std::runtime_error("char2_identity_check: term budget exceeded");

    const typename F::Elem lhs = determinant(f, phi_sum_matrix(f, spec, a, b, phi));
    const FourierData<F> fd = fourier_coefficients(f, spec, phi);

    typename F::Elem rhs = f.zero();
    detail::for_each_k_subset(m, k, [&](const std::vector<std::size_t>& us) {
        std::vector<Character> chars;
        chars.reserve(k);
        for (std::size_t u : us) chars.push_back(spec.element_at(u));
        Permutation pi = Permutation::identity(k);
        do {
            Matrix<F> inner = make_matrix(f, k, k);
            for (std::size_t i = 0; i < k; ++i) {
                const GroupElement sum_el = spec.element_at(sums[i][pi.map[i]]);
                for (std::size_t j = 0; j < k; ++j)
                    inner.at(i, j) =
                        f.mul(fd.lambda[us[j]],
                              f.zeta_pow(pairing_exponent(spec, chars[j], sum_el)));
            }
            rhs = f.add(rhs, determinant(f, inner));
        } while (std::next_permutation(pi.map.begin(), pi.map.end()));
        return true;
    });
    return f.eq(lhs, rhs);
}

/// A concrete function phi with Det(phi(a_i+b_j)) != 0. Tries the 0/1
/// indicator of the lemma4_permutation signature support, then the distinct-values
/// assignment g_i -> zeta^i. Both can collapse (on cyclic groups the zeta^i
/// assignment always does for k >= 2: every monomial's index sum is
/// sum(A)+sum(B) mod n, so the sum of all coefficients, which is 0, comes
/// out). The final fallback sums the characters of a common-basis witness;
/// by Cauchy-Binet its Det L equals det_A * det_B, which is nonzero.
template <FieldContext F>
GroupFunction<F> lemma4_indicator_phi(const F& f, const GroupSpec& spec,
                                      const std::vector<GroupElement>& a,
                                      const std::vector<GroupElement>& b) {
    require_compatible(f, spec);
    const Permutation pi = lemma4_permutation(spec, a, b);
    const MultisetSignature sig = multiset_signature(spec, a, b, pi);
    GroupFunction<F> phi(spec.order(), f.zero());
    for (std::uint64_t idx : sig) phi[idx] = f.one();
    if (!f.is_zero(determinant(f, phi_sum_matrix(f, spec, a, b, phi)))) return phi;
    GroupFunction<F> distinct;
    distinct.reserve(spec.order());
    for (std::uint64_t gi = 0; gi < spec.order(); ++gi)
        distinct.push_back(f.zeta_pow(gi % spec.exponent()));
    if (!f.is_zero(determinant(f, phi_sum_matrix(f, spec, a, b, distinct))))
        return distinct;
    const auto witness = theorem1_witness(f, spec, a, b);
    if (!witness)
        throw std::runtime_error("lemma4_indicator_phi: no common-basis witness");
    GroupFunction<F> basis_sum;
    basis_sum.reserve(spec.order());
    for (std::uint64_t gi = 0; gi < spec.order(); ++gi) {
        const GroupElement g = spec.element_at(gi);
        typename F::Elem acc = f.zero();
        for (const Character& u : witness->chars)
            acc = f.add(acc, f.zeta_pow(pairing_exponent(spec, u, g)));
        basis_sum.push_back(acc);
    }
    if (f.is_zero(determinant(f, phi_sum_matrix(f, spec, a, b, basis_sum))))
        throw std::runtime_error("lemma4_indicator_phi: basis-sum specialization vanished");
    return basis_sum;
}

/// True iff both char-matrix determinants against A and B are nonzero.
template <FieldContext F>
bool verify_theorem1_witness(const F& f, const GroupSpec& spec,
                             const std::vector<GroupElement>& a,
                             const std::vector<GroupElement>& b,
                             const std::vector<Character>& chars) {
    if (chars.size() != a.size() || a.size() != b.size())
        throw std::invalid_argument("verify_theorem1_witness: size mismatch");
    const typename F::Elem da = determinant(f, char_matrix(f, spec, chars, a));
    if (f.is_zero(da)) return false;
    const typename F::Elem db = determinant(f, char_matrix(f, spec, chars, b));
    return !f.is_zero(db);
}

}  // namespace snevily
