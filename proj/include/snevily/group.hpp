#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace snevily {

/// Element of a finite abelian group, stored as one residue per cyclic factor.
using GroupElement = std::vector<std::uint64_t>;

/// A finite abelian group Z_{n_1} x ... x Z_{n_r} with a fixed factor list.
///
/// Factor lists are taken exactly as given: Z_2 x Z_6 and Z_12 are distinct
/// specs even though the groups are isomorphic. Elements are enumerated in
/// mixed-radix order with the last coordinate varying fastest, so index 0 is
/// always the zero element.
class GroupSpec {
public:
    explicit GroupSpec(std::vector<std::uint64_t> moduli)
        : moduli_(std::move(moduli)) {
        if (moduli_.empty())
            throw std::invalid_argument("GroupSpec: at least one cyclic factor required");
        order_ = 1;
        exponent_ = 1;
        for (std::uint64_t ni : moduli_) {
            if (ni < 2)
                throw std::invalid_argument("GroupSpec: every modulus must be >= 2");
            if (order_ > UINT64_MAX / ni)
                throw std::invalid_argument("GroupSpec: group order overflows 64 bits");
            order_ *= ni;
            exponent_ = std::lcm(exponent_, ni);
        }
        strides_.assign(moduli_.size(), 1);
        for (std::size_t i = moduli_.size(); i-- > 1;)
            strides_[i - 1] = strides_[i] * moduli_[i];
    }

    const std::vector<std::uint64_t>& moduli() const { return moduli_; }
    std::size_t factor_count() const { return moduli_.size(); }
    std::uint64_t order() const { return order_; }
    std::uint64_t exponent() const { return exponent_; }

    bool operator==(const GroupSpec& other) const { return moduli_ == other.moduli_; }

    bool valid(const GroupElement& g) const {
        if (g.size() != moduli_.size()) return false;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] >= moduli_[i]) return false;
        return true;
    }

    /// Out-of-range coordinates are rejected, not silently reduced.
    void require_valid(const GroupElement& g) const {
        if (g.size() != moduli_.size())
            throw std::invalid_argument("GroupElement: coordinate count does not match group");
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] >= moduli_[i])
                throw std::invalid_argument("GroupElement: coordinate out of range");
    }

    GroupElement zero() const { return GroupElement(moduli_.size(), 0); }

    GroupElement add(const GroupElement& x, const GroupElement& y) const {
        require_valid(x);
        require_valid(y);
        GroupElement out(moduli_.size());
        for (std::size_t i = 0; i < moduli_.size(); ++i)
            out[i] = (x[i] + y[i]) % moduli_[i];
        return out;
    }

    GroupElement neg(const GroupElement& x) const {
        require_valid(x);
        GroupElement out(moduli_.size());
        for (std::size_t i = 0; i < moduli_.size(); ++i)
            out[i] = x[i] == 0 ? 0 : moduli_[i] - x[i];
        return out;
    }

    GroupElement sub(const GroupElement& x, const GroupElement& y) const {
        return add(x, neg(y));
    }

    /// Index of g in enumeration order (inverse of element_at).
    std::uint64_t index_of(const GroupElement& g) const {
        require_valid(g);
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < moduli_.size(); ++i)
            idx += g[i] * strides_[i];
        return idx;
    }

    GroupElement element_at(std::uint64_t idx) const {
        if (idx >= order_)
            throw std::invalid_argument("GroupSpec: element index out of range");
        GroupElement g(moduli_.size());
        for (std::size_t i = 0; i < moduli_.size(); ++i)
            g[i] = (idx / strides_[i]) % moduli_[i];
        return g;
    }

    /// All m elements, mixed-radix order, last coordinate fastest.
    std::vector<GroupElement> enumerate() const {
        std::vector<GroupElement> out;
        out.reserve(static_cast<std::size_t>(order_));
        for (std::uint64_t i = 0; i < order_; ++i)
            out.push_back(element_at(i));
        return out;
    }

private:
    std::vector<std::uint64_t> moduli_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t order_ = 1;
    std::uint64_t exponent_ = 1;
};

}  // namespace snevily
