#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "snevily/field.hpp"
#include "snevily/group.hpp"
#include "snevily/linalg.hpp"

namespace snevily {

/// Characters are dual-group elements, identified coordinate-wise with G
/// under the fixed factorization; same residue-vector shape as GroupElement.
using Character = GroupElement;

/// A function G -> F, dense over the canonical enumeration; must be total.
template <typename F>
using GroupFunction = std::vector<typename F::Elem>;

/// Fourier coefficients lambda_u indexed by dual element in canonical order.
template <typename F>
struct FourierData {
    std::vector<typename F::Elem> lambda;
};

template <FieldContext F>
void require_compatible(const F& f, const GroupSpec& spec) {
    if (f.root_order() != spec.exponent())
        throw std::invalid_argument("field root order does not match group exponent");
}

/// Exponent e with chi_u(g) = zeta^e, namely sum_i u_i g_i (n / n_i) mod n.
inline std::uint64_t pairing_exponent(const GroupSpec& spec, const Character& u,
                                      const GroupElement& g) {
    spec.require_valid(u);
    spec.require_valid(g);
    const std::uint64_t n = spec.exponent();
    unsigned __int128 e = 0;
    for (std::size_t i = 0; i < spec.factor_count(); ++i) {
        const std::uint64_t cof = n / spec.moduli()[i];
        e += (unsigned __int128)(u[i]) * g[i] % n * cof % n;
    }
    return static_cast<std::uint64_t>(e % n);
}

/// chi_u(g): always a power of zeta, hence nonzero.
template <FieldContext F>
typename F::Elem evaluate(const F& f, const GroupSpec& spec, const Character& u,
                          const GroupElement& g) {
    require_compatible(f, spec);
    return f.zeta_pow(pairing_exponent(spec, u, g));
}

/// Matrix (chi_i(a_j)) with rows indexed by chars and columns by elems.
template <FieldContext F>
Matrix<F> char_matrix(const F& f, const GroupSpec& spec,
                      const std::vector<Character>& chars,
                      const std::vector<GroupElement>& elems) {
    require_compatible(f, spec);
    Matrix<F> m = make_matrix(f, chars.size(), elems.size());
    for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            m.at(i, j) = f.zeta_pow(pairing_exponent(spec, chars[i], elems[j]));
    return m;
}

/// The m x m table (chi(g)); rows are dual elements, columns group elements,
/// both in canonical enumeration order. Nonsingular for every valid context.
template <FieldContext F>
Matrix<F> character_table(const F& f, const GroupSpec& spec) {
    const std::vector<GroupElement> elems = spec.enumerate();
    return char_matrix(f, spec, elems, elems);
}

/// sum_{g in G} chi_u(g) chi_v(g)^{-1}: image of |G| if u = v, else zero.
template <FieldContext F>
typename F::Elem orthogonality_sum(const F& f, const GroupSpec& spec, const Character& u,
                                   const Character& v) {
    require_compatible(f, spec);
    const std::uint64_t n = spec.exponent();
    typename F::Elem acc = f.zero();
    for (std::uint64_t gi = 0; gi < spec.order(); ++gi) {
        const GroupElement g = spec.element_at(gi);
        const std::uint64_t eu = pairing_exponent(spec, u, g);
        const std::uint64_t ev = pairing_exponent(spec, v, g);
        acc = f.add(acc, f.zeta_pow((eu + n - ev) % n));
    }
    return acc;
}

/// lambda_u = m^{-1} sum_g phi(g) chi_u(g)^{-1}.
template <FieldContext F>
FourierData<F> fourier_coefficients(const F& f, const GroupSpec& spec,
                                    const GroupFunction<F>& phi) {
    require_compatible(f, spec);
    const std::uint64_t m = spec.order();
    if (phi.size() != m)
        throw std::invalid_argument("fourier_coefficients: phi must be total on G");
    if (m > static_cast<std::uint64_t>(INT64_MAX))
        throw std::invalid_argument("fourier_coefficients: group too large");
    const std::uint64_t n = spec.exponent();
    const typename F::Elem m_inv = f.inv(f.from_integer(static_cast<std::int64_t>(m)));
    FourierData<F> out;
    out.lambda.reserve(m);
    std::vector<std::uint64_t> exps(m);
    for (std::uint64_t ui = 0; ui < m; ++ui) {
        const Character u = spec.element_at(ui);
        for (std::uint64_t gi = 0; gi < m; ++gi) {
            const std::uint64_t e = pairing_exponent(spec, u, spec.element_at(gi));
            exps[gi] = (n - e) % n;
        }
        out.lambda.push_back(f.mul(m_inv, f.zeta_weighted_sum(phi, exps)));
    }
    return out;
}

/// phi(g) = sum_u lambda_u chi_u(g); exact inverse of fourier_coefficients.
template <FieldContext F>
GroupFunction<F> fourier_reconstruct(const F& f, const GroupSpec& spec,
                                     const FourierData<F>& fd) {
    require_compatible(f, spec);
    const std::uint64_t m = spec.order();
    if (fd.lambda.size() != m)
        throw std::invalid_argument("fourier_reconstruct: coefficient vector not total");
    GroupFunction<F> phi;
    phi.reserve(m);
    std::vector<std::uint64_t> exps(m);
    for (std::uint64_t gi = 0; gi < m; ++gi) {
        const GroupElement g = spec.element_at(gi);
        for (std::uint64_t ui = 0; ui < m; ++ui)
            exps[ui] = pairing_exponent(spec, spec.element_at(ui), g);
        phi.push_back(f.zeta_weighted_sum(fd.lambda, exps));
    }
    return phi;
}

}  // namespace snevily
