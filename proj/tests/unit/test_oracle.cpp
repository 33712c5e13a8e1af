#include "critnum/oracle.hpp"

#include "critnum/formulas.hpp"
#include "critnum/number_theory.hpp"
#include "critnum/sumset.hpp"

#include "bridge.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace critnum;

namespace {

void expect_valid(const std::optional<WitnessSet>& w) {
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(check_witness(*w), "");
}

}  // namespace

TEST(Budget, Validation) {
    SearchBudget b;
    EXPECT_NO_THROW(b.validate());
    b.max_nodes = 0;
    EXPECT_THROW(b.validate(), std::invalid_argument);
    b = {};
    b.max_seconds = 0.0;
    EXPECT_THROW(b.validate(), std::invalid_argument);
    b = {};
    b.exhaustive_threshold_n = 0;
    EXPECT_THROW(b.validate(), std::invalid_argument);
}

TEST(RhoExact, Examples) {
    const SearchResult r = rho_exact(Group::cyclic(10), 4, 2);
    EXPECT_EQ(r.value, 5);
    EXPECT_TRUE(r.exhaustive);
    expect_valid(r.witness);
    EXPECT_EQ(r.witness->elements.size(), 4u);
    EXPECT_EQ(rho_exact(Group::cyclic(12), 3, 2).value, 3);
    for (const char* g : {"Z7", "Z2xZ4", "Z3xZ3"}) {
        for (int m = 1; m <= 5; ++m) {
            EXPECT_EQ(rho_exact(Group::parse(g), m, 1).value, m);
        }
    }
    EXPECT_THROW(rho_exact(Group::cyclic(5), 6, 2), std::invalid_argument);
    EXPECT_THROW(rho_exact(Group::cyclic(5), 0, 2), std::invalid_argument);
    EXPECT_THROW(rho_exact(Group::cyclic(65), 3, 2), std::invalid_argument);
}

TEST(RhoExact, MatchesBruteForce) {
    for (std::uint32_t n = 2; n <= 10; ++n) {
        for (const GroupSpec& spec : groups_of_order(n)) {
            const GroupPtr g = Group::make(spec);
            const brute::Group ref = brute_group(spec);
            for (int m = 1; m <= static_cast<int>(n); ++m) {
                for (int h = 1; h <= 3; ++h) {
                    const SearchResult r = rho_exact(g, m, h);
                    ASSERT_EQ(r.value, brute::rho(ref, m, h)) << spec.to_string() << ' ' << m << ' ' << h;
                    ASSERT_TRUE(r.exhaustive);
                    expect_valid(r.witness);
                }
            }
        }
    }
}

TEST(RhoHatExact, Examples) {
    EXPECT_EQ(rho_hat_exact(Group::cyclic(11), 5, 3).value, 7);
    EXPECT_EQ(rho_hat_exact(Group::parse("Z2xZ2"), 4, 2).value, 3);
    EXPECT_EQ(rho_hat_exact(Group::cyclic(7), 4, 2).value, 5);
    const SearchResult r = rho_hat_exact(Group::cyclic(20), 9, 3);
    EXPECT_EQ(r.value, 10);
    EXPECT_TRUE(r.exhaustive);
    expect_valid(r.witness);
    EXPECT_EQ(rho_hat_exact(Group::cyclic(6), 3, 0).value, 1);
    EXPECT_EQ(rho_hat_exact(Group::cyclic(6), 3, 3).value, 1);
    EXPECT_THROW(rho_hat_exact(Group::cyclic(6), 3, 4), std::invalid_argument);
}

TEST(RhoHatExact, MatchesBruteForce) {
    for (std::uint32_t n = 2; n <= 10; ++n) {
        for (const GroupSpec& spec : groups_of_order(n)) {
            const GroupPtr g = Group::make(spec);
            const brute::Group ref = brute_group(spec);
            for (int m = 1; m <= static_cast<int>(n); ++m) {
                for (int h = 0; h <= m; ++h) {
                    const SearchResult r = rho_hat_exact(g, m, h);
                    ASSERT_EQ(r.value, brute::rho_hat(ref, m, h)) << spec.to_string() << ' ' << m << ' ' << h;
                    expect_valid(r.witness);
                }
            }
        }
    }
}

TEST(RhoHatExact, PrimeFormulaSmallPrimes) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        for (int m = 1; m <= static_cast<int>(p); ++m) {
            for (int h = 1; h <= m; ++h) {
                ASSERT_EQ(rho_hat_exact(Group::cyclic(p), m, h).value, rho_hat_prime(p, m, h)) << p << ' ' << m;
            }
        }
    }
}

TEST(MaxDeficient, Examples) {
    const SearchResult r = max_deficient(Group::cyclic(10), {2, false, Element{1}, false});
    EXPECT_EQ(r.value, 5);
    expect_valid(r.witness);

    for (std::uint32_t n : {5u, 9u, 10u, 12u, 16u}) {
        const GroupPtr g = Group::cyclic(n);
        const auto l = static_cast<std::int64_t>(two_torsion(g).size());
        const SearchResult s = max_deficient(g, {2, true, Element{0}, false});
        EXPECT_EQ(s.value, (n + l) / 2) << n;
        expect_valid(s.witness);
    }

    const SearchResult e = max_deficient(Group::cyclic(12), {3, true, Element{1}, false});
    EXPECT_EQ(e.value, 6);
    expect_valid(e.witness);

    EXPECT_THROW(max_deficient(Group::cyclic(10), {0, false, Element{1}, false}), std::invalid_argument);
    EXPECT_THROW(max_deficient(Group::cyclic(10), {2, false, Element{10}, false}), std::invalid_argument);
}

TEST(ChiExact, Examples) {
    const CriticalSearch c = chi_exact(Group::cyclic(10), 2);
    EXPECT_EQ(c.value.value, 6);
    EXPECT_EQ(c.value.kind, ValueKind::exact);
    EXPECT_EQ(c.value.source, Source::oracle);
    expect_valid(c.detail.witness);
    EXPECT_EQ(chi_exact(Group::cyclic(12), 3).value.value, 7);
    EXPECT_EQ(chi_exact(Group::parse("Z2xZ6"), 3).value.value, 7);
    EXPECT_EQ(chi_exact(Group::parse("Z2xZ4"), 2).value.value, 5);

    const CriticalSearch h = chi_hat_exact(Group::cyclic(12), 3);
    EXPECT_EQ(h.value.value, 7);
    EXPECT_EQ(h.detail.witness->elements.size(), 6u);
    EXPECT_EQ(chi_hat_exact(Group::cyclic(13), 3).value.value, 7);
    EXPECT_EQ(chi_hat_exact(Group::cyclic(9), 2).value.value, 6);
    EXPECT_EQ(chi_hat_exact(Group::cyclic(12), 5).value.value, 8);
    const CriticalSearch blocked = chi_hat_exact(Group::parse("Z2xZ2xZ2"), 2);
    EXPECT_EQ(blocked.value.kind, ValueKind::undefined);
    EXPECT_FALSE(blocked.value.value.has_value());
}

TEST(ChiExact, MatchesBruteForce) {
    for (std::uint32_t n = 2; n <= 10; ++n) {
        for (const GroupSpec& spec : groups_of_order(n)) {
            const GroupPtr g = Group::make(spec);
            const brute::Group ref = brute_group(spec);
            for (int h = 1; h <= 4; ++h) {
                for (const bool star : {false, true}) {
                    const CriticalSearch c = chi_exact(g, h, {}, star);
                    const int truth = brute::chi(ref, h, star);
                    ASSERT_EQ(c.value.value.value_or(-1), truth) << spec.to_string() << " h=" << h << star;
                    expect_valid(c.detail.witness);
                }
            }
            for (int h = 1; h < static_cast<int>(n); ++h) {
                for (const bool star : {false, true}) {
                    const CriticalSearch c = chi_hat_exact(g, h, {}, star);
                    const int truth = brute::chi_hat(ref, h, star);
                    ASSERT_EQ(c.value.value.value_or(-1), truth) << spec.to_string() << " hat h=" << h << star;
                    expect_valid(c.detail.witness);
                }
            }
        }
    }
}

TEST(ChiExact, StarVariantsAgreeWhenDefined) {
    for (std::uint32_t n = 2; n <= 14; ++n) {
        for (const GroupSpec& spec : groups_of_order(n)) {
            const GroupPtr g = Group::make(spec);
            for (int h = 1; h < static_cast<int>(n); ++h) {
                const CriticalValue plain = chi_hat_exact(g, h).value;
                const CriticalValue star = chi_hat_exact(g, h, {}, true).value;
                if (plain.kind == ValueKind::exact && star.kind == ValueKind::exact) {
                    ASSERT_EQ(plain.value, star.value) << spec.to_string() << " h=" << h;
                }
                if (h <= 4) {
                    const CriticalValue star_chi = chi_exact(g, h, {}, true).value;
                    // Defined exactly when n >= 3 and h >= 2.
                    ASSERT_EQ(star_chi.kind == ValueKind::undefined, n < 3 || h < 2) << spec.to_string() << h;
                    if (star_chi.kind == ValueKind::exact) {
                        ASSERT_EQ(chi_exact(g, h).value.value, star_chi.value) << spec.to_string() << " h=" << h;
                    }
                }
                ASSERT_EQ(star.kind != ValueKind::undefined, well_defined_star(spec, h).defined)
                    << spec.to_string() << " h=" << h;
            }
        }
    }
}

TEST(SigmaCritical, Examples) {
    EXPECT_EQ(sigma_critical_exact(Group::cyclic(10)).value, 5);
    EXPECT_EQ(sigma_critical_exact(Group::cyclic(11)).value, 6);
    EXPECT_EQ(sigma_critical_exact(Group::cyclic(15)).value, 7);
    const SearchResult r = sigma_critical_exact(Group::parse("Z2xZ6"));
    EXPECT_EQ(r.value, 6);
    expect_valid(r.witness);
    EXPECT_EQ(sigma_critical_exact(Group::cyclic(12)).value, 6);
}

TEST(SigmaCritical, MatchesBruteForce) {
    for (std::uint32_t n = 3; n <= 12; ++n) {
        for (const GroupSpec& spec : groups_of_order(n)) {
            const SearchResult r = sigma_critical_exact(Group::make(spec));
            ASSERT_EQ(r.value, brute::sigma_critical(brute_group(spec))) << spec.to_string();
            expect_valid(r.witness);
        }
    }
}

TEST(SumFree, Examples) {
    const SearchResult r = max_sum_free(10);
    EXPECT_EQ(r.value, 5);
    expect_valid(r.witness);
    EXPECT_EQ(max_three_one_sum_free(8).value, 2);
    EXPECT_EQ(max_sum_free(3).value, 1);
    EXPECT_THROW(max_sum_free(1), std::invalid_argument);
}

TEST(SumFree, MatchesBruteForce) {
    for (std::uint32_t n = 2; n <= 16; ++n) {
        const SearchResult a = max_sum_free(n);
        const SearchResult b = max_three_one_sum_free(n);
        ASSERT_EQ(a.value, brute::max_k_free(static_cast<int>(n), 2)) << n;
        ASSERT_EQ(b.value, brute::max_k_free(static_cast<int>(n), 3)) << n;
        expect_valid(a.witness);
        expect_valid(b.witness);
    }
}

TEST(Budget, TrippedSearchIsNotExhaustive) {
    SearchBudget tiny;
    tiny.max_nodes = 3;
    const SearchResult r = rho_exact(Group::cyclic(30), 10, 2, tiny);
    EXPECT_FALSE(r.exhaustive);
    EXPECT_GE(r.value, rho_exact(Group::cyclic(30), 10, 2).value);
    expect_valid(r.witness);

    const CriticalSearch c = chi_hat_exact(Group::cyclic(30), 3, tiny);
    EXPECT_EQ(c.value.kind, ValueKind::lower_bound);
    expect_valid(c.detail.witness);
    EXPECT_FALSE(c.detail.witness->exact);
}

TEST(Budget, LargeGroupsOnlyGetAProbe) {
    SearchBudget b;
    b.exhaustive_threshold_n = 10;
    const SearchResult r = max_sum_free(12, b);
    EXPECT_FALSE(r.exhaustive);
    expect_valid(r.witness);
    EXPECT_LE(r.value, 6);
}

TEST(Constructions, CosetStripe) {
    const WitnessSet w = construct_coset_stripe(10, 2, 2);
    EXPECT_EQ(w.elements, (std::vector<std::uint32_t>{0, 2, 4, 6, 8}));
    EXPECT_TRUE(validate_witness(w));
    for (std::uint32_t n = 2; n <= 60; ++n) {
        for (int h = 1; h <= 6; ++h) {
            const WitnessSet s = construct_coset_stripe(n, h);
            ASSERT_TRUE(validate_witness(s)) << n << ' ' << h;
            ASSERT_EQ(static_cast<std::int64_t>(s.elements.size()), v_g_naive(n, h, 1)) << n << ' ' << h;
        }
    }
    EXPECT_THROW(construct_coset_stripe(10, 2, 3), std::invalid_argument);
}

TEST(Constructions, TwoTorsionPlusHalfOrbit) {
    const WitnessSet w = construct_two_torsion_plus_halforbit(Group::cyclic(9));
    EXPECT_EQ(w.elements.size(), 5u);
    EXPECT_TRUE(validate_witness(w));
    for (std::uint32_t n = 3; n <= 24; ++n) {
        for (const GroupSpec& spec : groups_of_order(n)) {
            if (spec.is_elementary_two_group()) {
                continue;
            }
            const GroupPtr g = Group::make(spec);
            const WitnessSet s = construct_two_torsion_plus_halforbit(g);
            ASSERT_TRUE(validate_witness(s)) << spec.to_string();
            ASSERT_EQ(s.elements.size(), (n + two_torsion(g).size()) / 2) << spec.to_string();
        }
    }
    EXPECT_THROW(construct_two_torsion_plus_halforbit(Group::parse("Z2xZ2")), std::invalid_argument);
}

TEST(Constructions, EvenElements) {
    const WitnessSet w = construct_even_elements(12, 3);
    EXPECT_EQ(w.elements, (std::vector<std::uint32_t>{0, 2, 4, 6, 8, 10}));
    EXPECT_TRUE(validate_witness(w));
    EXPECT_THROW(construct_even_elements(11, 3), std::invalid_argument);
}
