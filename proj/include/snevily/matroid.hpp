#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "snevily/characters.hpp"
#include "snevily/linalg.hpp"
#include "snevily/numtheory.hpp"

namespace snevily {

/// Linear matroid given by one column vector of length target_rank per ground
/// element; a subset is independent iff its columns have full rank.
template <typename F>
struct LinearMatroid {
    const F* field = nullptr;
    std::size_t target_rank = 0;
    std::vector<std::vector<typename F::Elem>> columns;

    std::size_t ground_size() const { return columns.size(); }
};

namespace detail {

inline void require_distinct_elements(const GroupSpec& spec,
                                      const std::vector<GroupElement>& set,
                                      const char* what) {
    std::vector<std::uint64_t> idx;
    idx.reserve(set.size());
    for (const auto& e : set) idx.push_back(spec.index_of(e));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw std::invalid_argument(std::string(what) + ": duplicate elements");
}

}  // namespace detail

/// M_A over ground set G-hat: the column of the dual element u is
/// (chi_u(a_1), ..., chi_u(a_k)).
template <FieldContext F>
LinearMatroid<F> subset_matroid(const F& f, const GroupSpec& spec,
                                const std::vector<GroupElement>& anchor) {
    require_compatible(f, spec);
    detail::require_distinct_elements(spec, anchor, "subset_matroid anchor");
    LinearMatroid<F> m;
    m.field = &f;
    m.target_rank = anchor.size();
    m.columns.resize(spec.order());
    for (std::uint64_t ui = 0; ui < spec.order(); ++ui) {
        const Character u = spec.element_at(ui);
        auto& col = m.columns[ui];
        col.reserve(anchor.size());
        for (const auto& a : anchor)
            col.push_back(f.zeta_pow(pairing_exponent(spec, u, a)));
    }
    return m;
}

/// Dual construction over ground set G: the column of g is (chi_i(g))_i.
template <FieldContext F>
LinearMatroid<F> character_matroid(const F& f, const GroupSpec& spec,
                                   const std::vector<Character>& chars) {
    require_compatible(f, spec);
    detail::require_distinct_elements(spec, chars, "character_matroid set");
    LinearMatroid<F> m;
    m.field = &f;
    m.target_rank = chars.size();
    m.columns.resize(spec.order());
    for (std::uint64_t gi = 0; gi < spec.order(); ++gi) {
        const GroupElement g = spec.element_at(gi);
        auto& col = m.columns[gi];
        col.reserve(chars.size());
        for (const auto& u : chars)
            col.push_back(f.zeta_pow(pairing_exponent(spec, u, g)));
    }
    return m;
}

/// Rank probe: columns of subset form a full-rank matrix.
template <FieldContext F>
bool is_independent(const LinearMatroid<F>& mat, const std::vector<std::size_t>& subset) {
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] >= mat.ground_size())
            throw std::invalid_argument("is_independent: foreign ground element");
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (subset[i] == subset[j])
                throw std::invalid_argument("is_independent: repeated ground element");
    }
    if (subset.size() > mat.target_rank) return false;
    const F& f = *mat.field;
    Matrix<F> m = make_matrix(f, mat.target_rank, subset.size());
    for (std::size_t j = 0; j < subset.size(); ++j)
        for (std::size_t i = 0; i < mat.target_rank; ++i)
            m.at(i, j) = mat.columns[subset[j]][i];
    return detail::rank_division_free(f, std::move(m)) == subset.size();
}

template <FieldContext F>
std::size_t matroid_rank(const LinearMatroid<F>& mat) {
    const F& f = *mat.field;
    Matrix<F> m = make_matrix(f, mat.target_rank, mat.ground_size());
    for (std::size_t j = 0; j < mat.ground_size(); ++j)
        for (std::size_t i = 0; i < mat.target_rank; ++i)
            m.at(i, j) = mat.columns[j][i];
    return detail::rank_division_free(f, std::move(m));
}

namespace detail {

template <FieldContext F>
bool swap_independent(const LinearMatroid<F>& mat, const std::vector<std::size_t>& current,
                      std::size_t out, std::size_t in) {
    std::vector<std::size_t> probe;
    probe.reserve(current.size());
    for (std::size_t v : current)
        if (v != out) probe.push_back(v);
    probe.push_back(in);
    return is_independent(mat, probe);
}

template <FieldContext F>
bool extend_independent(const LinearMatroid<F>& mat, const std::vector<std::size_t>& current,
                        std::size_t in) {
    std::vector<std::size_t> probe = current;
    probe.push_back(in);
    return is_independent(mat, probe);
}

}  // namespace detail

/// Grows a common independent set of two matroids on the same ground set to
/// size k by shortest augmenting paths in the exchange graph, with canonical
/// (ascending ground order) tie-breaking. Returns the sorted common basis, or
/// nullopt if augmentation stalls below k.
template <FieldContext FA, FieldContext FB>
std::optional<std::vector<std::size_t>> common_basis(const LinearMatroid<FA>& ma,
                                                     const LinearMatroid<FB>& mb) {
    if (ma.ground_size() != mb.ground_size())
        throw std::invalid_argument("common_basis: ground sets differ");
    if (ma.target_rank != mb.target_rank)
        throw std::invalid_argument("common_basis: target ranks differ");
    const std::size_t m = ma.ground_size();
    const std::size_t k = ma.target_rank;

    std::vector<char> in_set(m, 0);
    std::vector<std::size_t> current;

    while (current.size() < k) {
        std::vector<char> source(m, 0), sink(m, 0);
        for (std::size_t x = 0; x < m; ++x) {
            if (in_set[x]) continue;
            source[x] = detail::extend_independent(ma, current, x);
            sink[x] = detail::extend_independent(mb, current, x);
        }

        constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> prev(m, kUnset);
        std::vector<char> reached(m, 0);
        std::deque<std::size_t> queue;
        std::size_t found = kUnset;

        for (std::size_t x = 0; x < m && found == kUnset; ++x) {
            if (!source[x]) continue;
            reached[x] = 1;
            if (sink[x])
                found = x;
            else
                queue.push_back(x);
        }

        while (found == kUnset && !queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            if (!in_set[v]) {
                // v outside the set: arcs v -> y in I when I - y + v keeps M_B independent
                for (std::size_t y : current) {
                    if (reached[y]) continue;
                    if (detail::swap_independent(mb, current, y, v)) {
                        reached[y] = 1;
                        prev[y] = v;
                        queue.push_back(y);
                    }
                }
            } else {
                // v inside the set: arcs v -> x outside when I - v + x keeps M_A independent
                for (std::size_t x = 0; x < m; ++x) {
                    if (in_set[x] || reached[x]) continue;
                    if (detail::swap_independent(ma, current, v, x)) {
                        reached[x] = 1;
                        prev[x] = v;
                        if (sink[x]) {
                            found = x;
                            break;
                        }
                        queue.push_back(x);
                    }
                }
            }
        }

        if (found == kUnset) return std::nullopt;

        for (std::size_t v = found; v != kUnset; v = prev[v])
            in_set[v] = !in_set[v];
        current.clear();
        for (std::size_t x = 0; x < m; ++x)
            if (in_set[x]) current.push_back(x);
    }
    return current;
}

/// Oracle for common_basis: first k-subset in lexicographic order that is
/// independent in both matroids.
template <FieldContext FA, FieldContext FB>
std::optional<std::vector<std::size_t>> brute_force_common_basis(
    const LinearMatroid<FA>& ma, const LinearMatroid<FB>& mb,
    std::uint64_t max_subsets = 1000000) {
    if (ma.ground_size() != mb.ground_size())
        throw std::invalid_argument("brute_force_common_basis: ground sets differ");
    if (ma.target_rank != mb.target_rank)
        throw std::invalid_argument("brute_force_common_basis: target ranks differ");
    const std::size_t m = ma.ground_size();
    const std::size_t k = ma.target_rank;
    if (k == 0) return std::vector<std::size_t>{};
    if (k > m) return std::nullopt;
    if (binomial_capped(m, k, max_subsets) > max_subsets)
        throw std::runtime_error("brute_force_common_basis: subset budget exceeded");
    std::optional<std::vector<std::size_t>> result;
    detail::for_each_k_subset(m, k, [&](const std::vector<std::size_t>& idx) {
        if (is_independent(ma, idx) && is_independent(mb, idx)) {
            result = idx;
            return false;
        }
        return true;
    });
    return result;
}

/// Witness for the pair-of-subsets theorem: k characters with both
/// char-matrix determinants nonzero, plus the determinants themselves.
template <typename F>
struct Theorem1Witness {
    std::vector<Character> chars;
    typename F::Elem det_a;
    typename F::Elem det_b;
};

template <FieldContext F>
std::optional<Theorem1Witness<F>> theorem1_witness(const F& f, const GroupSpec& spec,
                                                   const std::vector<GroupElement>& a,
                                                   const std::vector<GroupElement>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("theorem1_witness: set sizes differ");
    const LinearMatroid<F> ma = subset_matroid(f, spec, a);
    const LinearMatroid<F> mb = subset_matroid(f, spec, b);
    const auto basis = common_basis(ma, mb);
    if (!basis) return std::nullopt;
    Theorem1Witness<F> w;
    w.chars.reserve(basis->size());
    for (std::size_t ui : *basis) w.chars.push_back(spec.element_at(ui));
    w.det_a = determinant(f, char_matrix(f, spec, w.chars, a));
    w.det_b = determinant(f, char_matrix(f, spec, w.chars, b));
    return w;
}

/// Witness for the dual theorem: k group elements a_j with both
/// Det(chi_i(a_j)) and Det(psi_i(a_j)) nonzero.
template <FieldContext F>
std::optional<std::vector<GroupElement>> dual_witness(const F& f, const GroupSpec& spec,
                                                      const std::vector<Character>& chars_x,
                                                      const std::vector<Character>& chars_psi) {
    if (chars_x.size() != chars_psi.size())
        throw std::invalid_argument("dual_witness: character set sizes differ");
    const LinearMatroid<F> mx = character_matroid(f, spec, chars_x);
    const LinearMatroid<F> mp = character_matroid(f, spec, chars_psi);
    const auto basis = common_basis(mx, mp);
    if (!basis) return std::nullopt;
    std::vector<GroupElement> out;
    out.reserve(basis->size());
    for (std::size_t gi : *basis) out.push_back(spec.element_at(gi));
    return out;
}

}  // namespace snevily
