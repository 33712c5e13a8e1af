#pragma once

#include "critnum/group.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace critnum {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A GroupSpec plus the precomputed shift tables used to translate bit-vector
/// subsets. Immutable after construction; share it freely across threads.
///
/// Translation by t acts digit by digit: for digit k with radix d and stride s,
/// positions whose digit is below d - t_k move up by t_k * s and the rest wrap
/// down by (d - t_k) * s. Cyclic groups reduce to a plain rotation.
class Group {
public:
    static GroupPtr make(GroupSpec spec);
    static GroupPtr make(std::initializer_list<std::uint64_t> factors);
    static GroupPtr cyclic(std::uint32_t n);
    static GroupPtr parse(std::string_view text);

    const GroupSpec& spec() const { return spec_; }
    std::uint32_t order() const { return spec_.order(); }
    bool fits_word() const { return spec_.order() <= 64; }
    std::uint64_t full_word() const { return full_word_; }

    Bits translate(const Bits& bits, Element t) const;

    /// Word-sized kernel; only valid when fits_word().
    std::uint64_t translate_word(std::uint64_t bits, Element t) const {
        for (const WordShift& op : word_plans_[t.index]) {
            bits = ((bits & op.low) << op.up) | ((bits & op.high) >> op.down);
        }
        return bits;
    }

    explicit Group(GroupSpec spec);

private:
    struct WordShift {
        std::uint64_t low = 0;
        std::uint64_t high = 0;
        std::uint32_t up = 0;
        std::uint32_t down = 0;
    };

    GroupSpec spec_;
    std::uint64_t full_word_ = 0;
    std::vector<std::vector<WordShift>> word_plans_;
    // masks_[digit][t]: positions whose digit is below d_digit - t (non-cyclic only)
    std::vector<std::vector<Bits>> masks_;
};

/// A subset of a finite abelian group stored as an n-bit vector.
class GSet {
public:
    explicit GSet(GroupPtr group);
    GSet(GroupPtr group, std::initializer_list<std::uint32_t> indices);
    GSet(GroupPtr group, std::span<const std::uint32_t> indices);
    GSet(GroupPtr group, Bits bits);

    static GSet full(GroupPtr group);
    static GSet from_word(GroupPtr group, std::uint64_t word);
    /// Parses "{0,2,4}" (whitespace tolerated).
    static GSet parse(GroupPtr group, std::string_view text);

    const Group& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    const GroupSpec& spec() const { return group_->spec(); }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool contains(Element a) const;
    void insert(Element a);
    void erase(Element a);

    const Bits& bits() const { return bits_; }
    std::uint64_t word() const;
    std::vector<std::uint32_t> indices() const;

    GSet translated(Element t) const;
    GSet negated() const;
    /// {k * a : a in A}
    GSet dilated(std::int64_t k) const;
    GSet complement() const;

    bool is_subset_of(const GSet& other) const;
    bool same_group(const GSet& other) const;

    GSet& operator|=(const GSet& other);
    GSet& operator&=(const GSet& other);
    GSet& operator-=(const GSet& other);
    friend GSet operator|(GSet a, const GSet& b) { return a |= b; }
    friend GSet operator&(GSet a, const GSet& b) { return a &= b; }
    friend GSet operator-(GSet a, const GSet& b) { return a -= b; }
    friend bool operator==(const GSet& a, const GSet& b);

    std::string to_string() const;

private:
    void require_same_group(const GSet& other) const;
    void refresh_size() { size_ = bits_.count(); }

    GroupPtr group_;
    Bits bits_;
    std::size_t size_ = 0;
};

/// L = {x : 2x = 0}.
GSet two_torsion(const GroupPtr& group);

/// L_g = {x : 2x = g}; empty or a coset of L.
GSet halving_set(const GroupPtr& group, Element g);

}  // namespace critnum
