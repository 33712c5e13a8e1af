#pragma once

#include "critnum/formulas.hpp"
#include "critnum/gset.hpp"
#include "critnum/witness.hpp"

#include <cstdint>
#include <optional>

namespace critnum {

/// Limits for one exact search. A search that trips any limit reports
/// exhaustive = false and returns the best value found so far, never a
/// claimed optimum.
struct SearchBudget {
    std::uint64_t max_nodes = std::uint64_t{1} << 40;
    double max_seconds = 1.0e7;
    /// Groups larger than this only get a short probe (at most
    /// kProbeNodes nodes), which is always reported as non-exhaustive.
    std::uint32_t exhaustive_threshold_n = 64;

    static constexpr std::uint64_t kProbeNodes = 20000;

    /// Throws std::invalid_argument unless every limit is positive.
    void validate() const;
};

/// Replaces max_seconds with $CRITNUM_BUDGET_SECONDS when that is set.
SearchBudget apply_env_overrides(SearchBudget budget);

struct SearchResult {
    std::int64_t value = 0;
    std::optional<WitnessSet> witness;
    bool exhaustive = true;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

/// Largest group order the bit-parallel searches handle.
inline constexpr std::uint32_t kMaxOracleOrder = 64;

/// min |hA| over m-subsets (1 <= m <= n, h >= 1). When the budget trips the
/// value is only an upper bound.
SearchResult rho_exact(const GroupPtr& group, int m, int h, const SearchBudget& budget = {});

/// min |h^A| over m-subsets (0 <= h <= m <= n).
SearchResult rho_hat_exact(const GroupPtr& group, int m, int h, const SearchBudget& budget = {});

struct DeficientQuery {
    int h = 1;
    bool restricted = false;
    Element target{0};
    bool exclude_zero = false;  // draw candidates from G \ {0}
};

/// Largest |A| with target not in hA (or h^A), by branch and bound over the
/// downward-closed family of target-avoiding sets.
SearchResult max_deficient(const GroupPtr& group, const DeficientQuery& query, const SearchBudget& budget = {});

struct CriticalSearch {
    CriticalValue value;      // source = oracle; lower_bound when incomplete, undefined when no m works
    SearchResult detail;      // largest deficient set over all targets
    std::uint32_t targets = 0;  // target classes searched
};

/// chi(G, h) = 1 + max deficient size over target classes. `star` restricts
/// candidate sets to G \ {0}.
CriticalSearch chi_exact(const GroupPtr& group, int h, const SearchBudget& budget = {}, bool star = false);
CriticalSearch chi_hat_exact(const GroupPtr& group, int h, const SearchBudget& budget = {}, bool star = false);

/// Least m such that every m-subset of G \ {0} has Sigma A = G (n >= 2).
SearchResult sigma_critical_exact(const GroupPtr& group, const SearchBudget& budget = {});

/// Largest A in Z_n with A and 2A disjoint / with A and 3A disjoint.
SearchResult max_sum_free(std::uint32_t n, const SearchBudget& budget = {});
SearchResult max_three_one_sum_free(std::uint32_t n, const SearchBudget& budget = {});

// Explicit extremal constructions. Each returned witness self-validates.

/// A = {x in Z_n : x mod d < floor((d - 2) / h) + 1}; h A misses every x with
/// x mod d = d - 1. d must divide n; d = 0 picks the divisor maximizing |A|.
WitnessSet construct_coset_stripe(std::uint32_t n, int h, std::uint32_t d = 0);

/// L together with one element from each pair {x, -x} outside L; has size
/// (n + |L|) / 2 and 0 is not a sum of two distinct elements. Throws
/// std::invalid_argument for groups of exponent 2.
WitnessSet construct_two_torsion_plus_halforbit(const GroupPtr& group);

/// The even residues of Z_n (n even); h^A stays inside the even residues,
/// so the odd target 1 is missed.
WitnessSet construct_even_elements(std::uint32_t n, int h);

}  // namespace critnum
