#include "critnum/sumset.hpp"

#include "bridge.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <span>
#include <stdexcept>

using namespace critnum;

namespace {

std::vector<std::uint32_t> as_indices(const brute::Set& s) {
    return {s.begin(), s.end()};
}

brute::Set as_set(const GSet& a) {
    const auto idx = a.indices();
    return {idx.begin(), idx.end()};
}

}  // namespace

TEST(Sumset, SmallExamples) {
    const GroupPtr g = Group::cyclic(10);
    const GSet a(g, {0, 2, 4, 6});
    EXPECT_EQ(h_fold(a, 2).to_string(), "{0,2,4,6,8}");
    EXPECT_EQ(h_fold_restricted(a, 2).to_string(), "{0,2,4,6,8}");
    EXPECT_EQ(h_fold_restricted(GSet(g, {0, 1, 2, 3, 4}), 2).size(), 7u);
    EXPECT_EQ(pair_sumset(GSet(g, {1}), GSet(g, {2, 3})).to_string(), "{3,4}");
}

TEST(Sumset, EdgeCases) {
    const GroupPtr g = Group::cyclic(7);
    const GSet a(g, {1, 2});
    EXPECT_TRUE(h_fold_restricted(a, 3).empty());
    EXPECT_EQ(h_fold_restricted(a, 0).to_string(), "{0}");
    EXPECT_TRUE(h_fold(GSet(g), 2).empty());
    EXPECT_THROW(h_fold(a, 0), std::invalid_argument);
    EXPECT_THROW(h_fold_restricted(a, -1), std::invalid_argument);
    // Sigma A keeps the empty sum.
    EXPECT_TRUE(subset_sums(GSet(g)).contains(Element{0}));
    EXPECT_EQ(subset_sums(a).to_string(), "{0,1,2,3}");
}

TEST(Sumset, MatchesReferenceOnRandomSets) {
    std::mt19937_64 rng(2024);
    for (std::uint32_t n = 2; n <= 20; ++n) {
        for (const GroupSpec& spec : groups_of_order(n)) {
            const GroupPtr g = Group::make(spec);
            const brute::Group ref = brute_group(spec);
            for (int trial = 0; trial < 6; ++trial) {
                std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
                const std::uint64_t mask = pick(rng) & pick(rng);
                const GSet a = GSet::from_word(g, mask);
                const brute::Set ra = brute::set_of_mask(mask);
                const auto layers = restricted_layers(a, 5);
                for (int h = 1; h <= 5; ++h) {
                    ASSERT_EQ(h_fold(a, h).indices(), as_indices(brute::sumset(ref, ra, h))) << spec.to_string();
                    ASSERT_EQ(h_fold_restricted(a, h).indices(), as_indices(brute::restricted_sumset(ref, ra, h)));
                    ASSERT_EQ(layers[static_cast<std::size_t>(h)], h_fold_restricted(a, h));
                }
                ASSERT_EQ(as_set(subset_sums(a)), brute::subset_sums(ref, ra));
            }
        }
    }
}

TEST(Sumset, RestrictedMatchesCombinationsUpToOrder64) {
    std::mt19937_64 rng(77);
    std::vector<std::uint32_t> orders;
    for (std::uint32_t n = 2; n <= 64; ++n) {
        orders.push_back(n);
    }
    orders.insert(orders.end(), {96, 128, 200});  // beyond one word
    for (const std::uint32_t n : orders) {
        for (const GroupSpec& spec : groups_of_order(n)) {
            const GroupPtr g = Group::make(spec);
            const brute::Group ref = brute_group(spec);
            std::vector<std::uint32_t> all(n);
            for (std::uint32_t i = 0; i < n; ++i) {
                all[i] = i;
            }
            for (int trial = 0; trial < 3; ++trial) {
                std::shuffle(all.begin(), all.end(), rng);
                const std::size_t size = 1 + rng() % std::min<std::size_t>(12, n);
                std::vector<std::uint32_t> pick(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
                const GSet a(g, std::span<const std::uint32_t>(pick));
                const brute::Set ra(pick.begin(), pick.end());
                for (int h = 0; h <= 6; ++h) {
                    ASSERT_EQ(h_fold_restricted(a, h).indices(), as_indices(brute::restricted_sumset(ref, ra, h)))
                        << spec.to_string() << ' ' << a.to_string() << " h=" << h;
                    if (h >= 1) {
                        ASSERT_EQ(h_fold(a, h).indices(), as_indices(brute::sumset(ref, ra, h)))
                            << spec.to_string() << ' ' << a.to_string() << " h=" << h;
                    }
                }
            }
        }
    }
}

TEST(Sumset, StructurePredicates) {
    const GroupPtr z12 = Group::cyclic(12);
    EXPECT_TRUE(is_subgroup(GSet(z12, {0, 4, 8})));
    EXPECT_FALSE(is_subgroup(GSet(z12, {1, 5, 9})));
    EXPECT_TRUE(is_coset(GSet(z12, {1, 5, 9})));
    EXPECT_FALSE(is_coset(GSet(z12, {0, 1, 5})));

    const GroupPtr v = Group::parse("Z2xZ2");
    EXPECT_TRUE(is_coset_of_subgroup_within(GSet::full(v), two_torsion(v)));
    const GroupPtr z8 = Group::cyclic(8);
    EXPECT_TRUE(is_two_cosets_of_order_two_subgroup(GSet(z8, {0, 4, 1, 5})));
    EXPECT_FALSE(is_two_cosets_of_order_two_subgroup(GSet(z8, {0, 1, 2, 3})));
    const GroupPtr e3 = Group::parse("Z2xZ2xZ2");
    EXPECT_TRUE(is_coset_of_two_torsion_subgroup_minus_one(GSet(e3, {0, 1, 2}), two_torsion(e3)));
    EXPECT_FALSE(is_coset_of_two_torsion_subgroup_minus_one(GSet(e3, {0, 1}), two_torsion(e3)));
}
