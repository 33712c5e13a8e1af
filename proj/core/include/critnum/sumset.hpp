#pragma once

#include "critnum/gset.hpp"

#include <vector>

namespace critnum {

/// A + B. Throws std::invalid_argument when the operands live in different
/// groups; an empty operand gives an empty result.
GSet pair_sumset(const GSet& a, const GSet& b);

/// hA, sums of h not-necessarily-distinct elements. Throws for h < 1.
GSet h_fold(const GSet& a, int h);

/// h^A, sums of h distinct elements. h = 0 gives {0}; h > |A| gives the
/// empty set. Throws for h < 0.
GSet h_fold_restricted(const GSet& a, int h);

/// j^A for every j in [0, h_max], from one pass of the layered recurrence.
/// Layers are filled with j descending so no element is used twice.
std::vector<GSet> restricted_layers(const GSet& a, int h_max);

/// Sigma A: union of j^A over all j >= 0 (so it always contains 0).
GSet subset_sums(const GSet& a);

// Structure predicates used to classify restricted sumset sizes.

/// Nonempty S with 0 in S and S + S = S.
bool is_subgroup(const GSet& s);

/// A = a + H for some subgroup H.
bool is_coset(const GSet& a);

/// A = a + H for a subgroup H that lies inside `ambient`.
bool is_coset_of_subgroup_within(const GSet& a, const GSet& ambient);

/// A is a coset of a subgroup of L with one element removed.
bool is_coset_of_two_torsion_subgroup_minus_one(const GSet& a, const GSet& two_torsion_subgroup);

/// A is the union of two cosets of one subgroup of order 2.
bool is_two_cosets_of_order_two_subgroup(const GSet& a);

}  // namespace critnum
