#pragma once

#include "critnum/gset.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace critnum {

enum class Quantity {
    u,
    v_g,
    rho,
    rho_hat,
    chi,
    chi_star,
    chi_hat,
    chi_hat_star,
    classical_critical,
};

enum class ValueKind { exact, lower_bound, upper_bound, undefined };
enum class Source { formula, oracle, conjecture };

std::string_view to_string(Quantity q);
std::string_view to_string(ValueKind k);
std::string_view to_string(Source s);
Quantity parse_quantity(std::string_view text);

/// A computed critical quantity. `value` is empty exactly when kind is
/// undefined; `case_tag` names the rule that produced a formula value.
struct CriticalValue {
    Quantity quantity = Quantity::chi;
    ValueKind kind = ValueKind::undefined;
    std::optional<std::int64_t> value;
    Source source = Source::formula;
    std::string case_tag;
    std::string group;  // optional display label

    friend bool operator==(const CriticalValue&, const CriticalValue&) = default;
};

/// {"quantity":..,"kind":..,"value":..,"source":..,"case_tag":..[,"group":..]}
std::string to_json(const CriticalValue& cv);

// ---------------------------------------------------------------------------
// Divisor functions

/// min over d | n of (h * ceil(m/d) - h + 1) * d. Requires 1 <= m <= n, h >= 1.
std::int64_t u_func(std::int64_t n, std::int64_t m, std::int64_t h);

/// max over d | n of (floor((d - 1 - gcd(d, g)) / h) + 1) * n / d, floors
/// toward negative infinity. Requires 1 <= g <= h.
std::int64_t v_g_naive(std::int64_t n, std::int64_t h, std::int64_t g);

struct VgEvaluation {
    std::int64_t value = 0;
    std::string case_tag;               // "prime_residue", "floor_n_over_h", "floor_n_minus_1_over_h"
    std::optional<std::int64_t> residue;  // maximizing i when the residue set is nonempty
    std::optional<std::int64_t> prime;    // the matching smallest prime p_i
};

/// Residue-class form of v_g: looks at the smallest prime divisor of n in each
/// residue class i (2 <= i <= h-1) mod h that does not divide g. Evaluated in
/// exact integer arithmetic; throws std::logic_error if the maximizing residue
/// is not unique or the value is not integral.
VgEvaluation v_g_closed_eval(std::int64_t n, std::int64_t h, std::int64_t g);
std::int64_t v_g_closed(std::int64_t n, std::int64_t h, std::int64_t g);

// ---------------------------------------------------------------------------
// Critical numbers

/// chi(G, h) = v_1(n, h) + 1 for every group of order n.
CriticalValue chi_unrestricted(std::int64_t n, std::int64_t h);

/// min{p, h m - h^2 + 1}; throws for composite p or 1 <= h <= m <= p violated.
std::int64_t rho_hat_prime(std::int64_t p, std::int64_t m, std::int64_t h);

enum class WellDefinedReason {
    h_is_1_or_n_minus_1,
    h_2_or_n_minus_2_not_elem2,
    middle_range,
    elem2_blocker,
    out_of_range,
    star_set_too_small,  // even A = G \ {0} has h^A != G
};
std::string_view to_string(WellDefinedReason r);

struct WellDefinedness {
    bool defined = false;
    WellDefinedReason reason = WellDefinedReason::out_of_range;
};

/// Whether some m makes every m-subset's h-fold restricted sumset all of G.
WellDefinedness well_defined(const GroupSpec& group, std::int64_t h);
/// Same, with candidate sets drawn from G \ {0}. This holds exactly when
/// h^(G \ {0}) = G: never for h in {1, n-2, n-1}; for h in {2, n-3} when
/// n >= 5 and G is not an elementary abelian 2-group; always for
/// 3 <= h <= n-4.
WellDefinedness well_defined_star(const GroupSpec& group, std::int64_t h);

/// Every closed-form rule that applies to chi^(G, h), in priority order:
/// trivial h in {1, n-1}, prime cyclic, h = 2, large h, even cyclic table,
/// then the h = 3 lower bound. Empty when none applies or undefined.
std::vector<CriticalValue> chi_hat_closed_cases(const GroupSpec& group, std::int64_t h);

/// The highest-priority case from chi_hat_closed_cases; kind undefined (with
/// the blocking reason as case_tag) when nothing applies.
CriticalValue chi_hat_closed(const GroupSpec& group, std::int64_t h);

/// Lower bound for chi^(Z_n, 3), n >= 11.
std::int64_t chi_hat3_lower_bound(std::int64_t n);
std::string chi_hat3_lower_bound_case(std::int64_t n);

struct RhoHat3Bound {
    std::int64_t value = 0;
    int row = 0;  // 1..4, first matching row of the gcd(n, m-1) table
};

/// Upper bound for rho^(Z_n, m, 3), 4 <= m <= n, clamped to n.
RhoHat3Bound rho_hat3_upper_eval(std::int64_t n, std::int64_t m);
std::int64_t rho_hat3_upper(std::int64_t n, std::int64_t m);

/// The zero-avoiding subset-sum critical number (starred variant). Throws
/// std::out_of_range for n < 10.
CriticalValue classical_critical(const GroupSpec& group);

/// floor(2n/5) + 1 and floor(4n/11) + 1: integer forms of the linear upper
/// bounds reported alongside chi^(Z_n, 3).
std::int64_t lev_bound(std::int64_t n);
std::int64_t four_elevenths_bound(std::int64_t n);

/// |L| = 2^(number of even invariant factors).
std::int64_t two_torsion_size(const GroupSpec& group);

enum class GghClass { m_minus_1, exactly_m, at_least_m_plus_1 };
std::string_view to_string(GghClass c);

struct GghPrediction {
    GghClass cls = GghClass::at_least_m_plus_1;
    std::string case_tag;  // "1", "2a", "2b", "2c", "2d" or "3"
};

/// Predicted size class of h^A from the structure of A (1 <= h <= |A| - 1).
GghPrediction ggh_predict(const GSet& a, std::int64_t h);
GghClass ggh_expected_class(const GSet& a, std::int64_t h);

}  // namespace critnum
