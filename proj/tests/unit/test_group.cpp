#include "critnum/group.hpp"

#include "bridge.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace critnum;

TEST(GroupSpec, NormalizesToInvariantFactors) {
    EXPECT_EQ(GroupSpec::make({3, 4}), GroupSpec::cyclic(12));
    EXPECT_EQ(GroupSpec::make({6, 2}).invariant_factors(), (std::vector<std::uint32_t>{2, 6}));
    EXPECT_EQ(GroupSpec::make({2, 3, 4}).invariant_factors(), (std::vector<std::uint32_t>{2, 12}));
    EXPECT_EQ(GroupSpec::make({4, 6, 10}).invariant_factors(), (std::vector<std::uint32_t>{2, 2, 60}));
}

TEST(GroupSpec, ParsesShorthandAndProducts) {
    EXPECT_EQ(GroupSpec::parse("Z12").to_string(), "Z12");
    EXPECT_EQ(GroupSpec::parse("Z3xZ4").to_string(), "Z12");
    EXPECT_EQ(GroupSpec::parse("z_2 x z_6").to_string(), "Z2xZ6");
    EXPECT_EQ(GroupSpec::parse("Z6xZ2").to_string(), "Z2xZ6");
    EXPECT_THROW(GroupSpec::parse("Q8"), std::invalid_argument);
    EXPECT_THROW(GroupSpec::parse("Z1"), std::invalid_argument);
    EXPECT_THROW(GroupSpec::parse(""), std::invalid_argument);
}

TEST(GroupSpec, BasicInvariants) {
    const GroupSpec g = GroupSpec::parse("Z2xZ2xZ4");
    EXPECT_EQ(g.order(), 16u);
    EXPECT_EQ(g.exponent(), 4u);
    EXPECT_EQ(g.rank(), 3u);
    EXPECT_FALSE(g.is_cyclic());
    EXPECT_FALSE(g.is_elementary_two_group());
    EXPECT_TRUE(GroupSpec::parse("Z2xZ2xZ2").is_elementary_two_group());
}

TEST(GroupSpec, GroupsOfOrder) {
    auto names = [](std::uint32_t n) {
        std::vector<std::string> out;
        for (const auto& g : groups_of_order(n)) {
            out.push_back(g.to_string());
        }
        return out;
    };
    EXPECT_EQ(names(8), (std::vector<std::string>{"Z8", "Z2xZ4", "Z2xZ2xZ2"}));
    EXPECT_EQ(names(12), (std::vector<std::string>{"Z12", "Z2xZ6"}));
    EXPECT_EQ(names(13), (std::vector<std::string>{"Z13"}));
    EXPECT_EQ(names(16), (std::vector<std::string>{"Z16", "Z4xZ4", "Z2xZ8", "Z2xZ2xZ4", "Z2xZ2xZ2xZ2"}));
    EXPECT_EQ(count_groups_of_order(72), 6u);
    for (std::uint32_t n = 2; n <= 200; ++n) {
        const auto gs = groups_of_order(n);
        ASSERT_EQ(gs.size(), count_groups_of_order(n)) << n;
        ASSERT_TRUE(gs.front().is_cyclic());
        for (const auto& g : gs) {
            ASSERT_EQ(g.order(), n);
        }
    }
}

TEST(GroupSpec, ArithmeticMatchesReference) {
    for (std::uint32_t n = 2; n <= 24; ++n) {
        for (const GroupSpec& spec : groups_of_order(n)) {
            const brute::Group ref = brute_group(spec);
            for (std::uint32_t a = 0; a < n; ++a) {
                ASSERT_EQ(spec.neg(Element{a}).index, static_cast<std::uint32_t>(ref.neg(static_cast<int>(a))));
                ASSERT_EQ(spec.scale(3, Element{a}).index, static_cast<std::uint32_t>(ref.times(3, static_cast<int>(a))));
                ASSERT_EQ(spec.scale(-1, Element{a}), spec.neg(Element{a}));
                ASSERT_EQ(spec.from_digits(spec.digits(Element{a})), Element{a});
                for (std::uint32_t b = 0; b < n; ++b) {
                    ASSERT_EQ(spec.add(Element{a}, Element{b}).index,
                              static_cast<std::uint32_t>(ref.add(static_cast<int>(a), static_cast<int>(b))))
                        << spec.to_string();
                }
            }
        }
    }
}

TEST(GroupSpec, RejectsOutOfRangeElements) {
    const GroupSpec g = GroupSpec::cyclic(5);
    EXPECT_FALSE(g.contains(Element{5}));
    EXPECT_THROW(g.add(Element{5}, Element{0}), std::invalid_argument);
}
