#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "snevily/cyclotomic.hpp"
#include "snevily/finite_field.hpp"
#include "snevily/group.hpp"

namespace snevily {

/// Exact field backend carrying a distinguished root of unity zeta of order
/// root_order(). Realized by PrimePowerField and CyclotomicField.
template <typename F>
concept FieldContext = requires(const F f, const typename F::Elem& a, std::uint64_t e,
                                std::int64_t v, const std::vector<typename F::Elem>& vals,
                                const std::vector<std::uint64_t>& exps) {
    typename F::Elem;
    { f.zeta_weighted_sum(vals, exps) } -> std::convertible_to<typename F::Elem>;
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.one() } -> std::convertible_to<typename F::Elem>;
    { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.neg(a) } -> std::convertible_to<typename F::Elem>;
    { f.inv(a) } -> std::convertible_to<typename F::Elem>;
    { f.pow(a, e) } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.eq(a, a) } -> std::same_as<bool>;
    { f.from_integer(v) } -> std::convertible_to<typename F::Elem>;
    { f.zeta_pow(e) } -> std::convertible_to<typename F::Elem>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { f.root_order() } -> std::convertible_to<std::uint64_t>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.describe() } -> std::convertible_to<std::string>;
};

static_assert(FieldContext<PrimePowerField>);
static_assert(FieldContext<CyclotomicField>);

/// Parsed form of the field spec text "gf:p" or "cyc".
struct FieldSpec {
    enum class Kind { finite, cyclotomic };
    Kind kind = Kind::cyclotomic;
    std::uint64_t characteristic = 0;  // finite backend only

    bool operator==(const FieldSpec&) const = default;
};

/// Builds the backend for `fs` with root order = exponent of `g`, then calls fn.
template <typename Fn>
decltype(auto) with_field(const FieldSpec& fs, const GroupSpec& g, Fn&& fn) {
    if (fs.kind == FieldSpec::Kind::finite) {
        PrimePowerField f(fs.characteristic, g.exponent());
        return std::forward<Fn>(fn)(f);
    }
    CyclotomicField f(g.exponent());
    return std::forward<Fn>(fn)(f);
}

}  // namespace snevily
