#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace critnum {

/// A group element, addressed by its mixed-radix index over the invariant
/// factors (the last, largest factor is the fastest-varying digit).
struct Element {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(Element, Element) = default;
};

/// Isomorphism type of a finite abelian group in invariant-factor form
/// d_1 | d_2 | ... | d_k, each d_i >= 2. Two specs compare equal exactly when
/// the groups are isomorphic.
class GroupSpec {
public:
    /// Normalizes the direct sum Z_{f_1} x ... x Z_{f_r} into invariant
    /// factors. Throws std::invalid_argument for a factor < 2, an empty list,
    /// or an order that does not fit in 31 bits.
    static GroupSpec make(std::span<const std::uint64_t> factors);
    static GroupSpec make(std::initializer_list<std::uint64_t> factors);
    static GroupSpec cyclic(std::uint32_t n);

    /// Parses "Z2xZ6", "z_2 x z_6", "Z12" etc. The result is normalized, so
    /// "Z3xZ4" parses to Z12.
    static GroupSpec parse(std::string_view text);

    const std::vector<std::uint32_t>& invariant_factors() const { return factors_; }
    std::uint32_t order() const { return order_; }
    std::uint32_t exponent() const { return factors_.back(); }
    std::size_t rank() const { return factors_.size(); }
    bool is_cyclic() const { return factors_.size() == 1; }
    bool is_elementary_two_group() const { return exponent() == 2; }

    std::uint32_t stride(std::size_t digit) const { return strides_[digit]; }

    std::string to_string() const;

    bool contains(Element a) const { return a.index < order_; }
    std::vector<std::uint32_t> digits(Element a) const;
    Element from_digits(std::span<const std::uint32_t> digits) const;

    Element zero() const { return Element{0}; }
    Element add(Element a, Element b) const;
    Element neg(Element a) const;
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    /// k * a for any integer k (negative k allowed).
    Element scale(std::int64_t k, Element a) const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.factors_ == b.factors_; }
    friend std::strong_ordering operator<=>(const GroupSpec& a, const GroupSpec& b) {
        return a.factors_ <=> b.factors_;
    }

private:
    GroupSpec() = default;
    void check(Element a) const;

    std::vector<std::uint32_t> factors_;
    std::vector<std::uint32_t> strides_;
    std::uint32_t order_ = 0;
};

/// Free-function spelling of GroupSpec::make.
GroupSpec make_group(std::span<const std::uint64_t> factors);

/// All isomorphism types of abelian groups of order n (n >= 2), cyclic first,
/// then descending lexicographically by invariant factors.
std::vector<GroupSpec> groups_of_order(std::uint32_t n);

/// Number of isomorphism types of order n (product of partition counts).
std::uint64_t count_groups_of_order(std::uint32_t n);

}  // namespace critnum
