#include "critnum/formulas.hpp"

#include "critnum/number_theory.hpp"
#include "critnum/sumset.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace critnum {

std::string_view to_string(Quantity q) {
    switch (q) {
    case Quantity::u: return "u";
    case Quantity::v_g: return "v_g";
    case Quantity::rho: return "rho";
    case Quantity::rho_hat: return "rho_hat";
    case Quantity::chi: return "chi";
    case Quantity::chi_star: return "chi_star";
    case Quantity::chi_hat: return "chi_hat";
    case Quantity::chi_hat_star: return "chi_hat_star";
    case Quantity::classical_critical: return "classical_critical";
    }
    return "?";
}

std::string_view to_string(ValueKind k) {
    switch (k) {
    case ValueKind::exact: return "exact";
    case ValueKind::lower_bound: return "lower_bound";
    case ValueKind::upper_bound: return "upper_bound";
    case ValueKind::undefined: return "undefined";
    }
    return "?";
}

std::string_view to_string(Source s) {
    switch (s) {
    case Source::formula: return "formula";
    case Source::oracle: return "oracle";
    case Source::conjecture: return "conjecture";
    }
    return "?";
}

Quantity parse_quantity(std::string_view text) {
    for (const Quantity q : {Quantity::u, Quantity::v_g, Quantity::rho, Quantity::rho_hat, Quantity::chi,
                             Quantity::chi_star, Quantity::chi_hat, Quantity::chi_hat_star,
                             Quantity::classical_critical}) {
        if (to_string(q) == text) {
            return q;
        }
    }
    throw std::invalid_argument("unknown quantity '" + std::string(text) + "'");
}

std::string_view to_string(WellDefinedReason r) {
    switch (r) {
    case WellDefinedReason::h_is_1_or_n_minus_1: return "h_is_1_or_n_minus_1";
    case WellDefinedReason::h_2_or_n_minus_2_not_elem2: return "h_2_or_n_minus_2_not_elem2";
    case WellDefinedReason::middle_range: return "middle_range";
    case WellDefinedReason::elem2_blocker: return "elem2_blocker";
    case WellDefinedReason::out_of_range: return "out_of_range";
    case WellDefinedReason::star_set_too_small: return "star_set_too_small";
    }
    return "?";
}

std::string_view to_string(GghClass c) {
    switch (c) {
    case GghClass::m_minus_1: return "m_minus_1";
    case GghClass::exactly_m: return "exactly_m";
    case GghClass::at_least_m_plus_1: return "at_least_m_plus_1";
    }
    return "?";
}

std::string to_json(const CriticalValue& cv) {
    nlohmann::ordered_json j;
    j["quantity"] = to_string(cv.quantity);
    j["kind"] = to_string(cv.kind);
    j["value"] = cv.value ? nlohmann::ordered_json(*cv.value) : nlohmann::ordered_json(nullptr);
    j["source"] = to_string(cv.source);
    j["case_tag"] = cv.case_tag;
    if (!cv.group.empty()) {
        j["group"] = cv.group;
    }
    return j.dump();
}

// ---------------------------------------------------------------------------

std::int64_t u_func(std::int64_t n, std::int64_t m, std::int64_t h) {
    if (n < 1 || m < 1 || h < 1) {
        throw std::invalid_argument("u_func: n, m, h must be positive");
    }
    if (m > n) {
        throw std::invalid_argument("u_func: m must not exceed n");
    }
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const std::uint64_t du : divisors(static_cast<std::uint64_t>(n)).divisors) {
        const auto d = static_cast<std::int64_t>(du);
        best = std::min(best, (h * ceil_div(m, d) - h + 1) * d);
    }
    return best;
}

namespace {

void check_vg_args(std::int64_t n, std::int64_t h, std::int64_t g) {
    if (n < 1 || h < 1) {
        throw std::invalid_argument("v_g: n and h must be positive");
    }
    if (g < 1 || g > h) {
        throw std::invalid_argument("v_g: g must satisfy 1 <= g <= h");
    }
}

}  // namespace

std::int64_t v_g_naive(std::int64_t n, std::int64_t h, std::int64_t g) {
    check_vg_args(n, h, g);
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (const std::uint64_t du : divisors(static_cast<std::uint64_t>(n)).divisors) {
        const auto d = static_cast<std::int64_t>(du);
        const std::int64_t term = (floor_div(d - 1 - std::gcd(d, g), h) + 1) * (n / d);
        best = std::max(best, term);
    }
    return best;
}

VgEvaluation v_g_closed_eval(std::int64_t n, std::int64_t h, std::int64_t g) {
    check_vg_args(n, h, g);

    // Smallest prime divisor of n not dividing g, per residue i in [2, h-1].
    std::vector<std::int64_t> smallest(static_cast<std::size_t>(h), 0);
    for (const std::uint64_t pu : prime_divisors(static_cast<std::uint64_t>(n))) {
        const auto p = static_cast<std::int64_t>(pu);
        if (g % p == 0) {
            continue;
        }
        const std::int64_t i = p % h;
        if (i >= 2 && smallest[i] == 0) {
            smallest[i] = p;  // primes arrive in ascending order
        }
    }

    // Maximize (h - i) / p_i by cross-multiplication.
    std::int64_t best_i = 0;
    std::int64_t best_p = 0;
    bool tie = false;
    for (std::int64_t i = 2; i <= h - 1; ++i) {
        const std::int64_t p = smallest[i];
        if (p == 0) {
            continue;
        }
        if (best_i == 0) {
            best_i = i;
            best_p = p;
            tie = false;
            continue;
        }
        const std::int64_t lhs = (h - i) * best_p;
        const std::int64_t rhs = (h - best_i) * p;
        if (lhs > rhs) {
            best_i = i;
            best_p = p;
            tie = false;
        } else if (lhs == rhs) {
            tie = true;
        }
    }

    VgEvaluation out;
    if (best_i == 0) {
        if (g != h) {
            out.value = n / h;
            out.case_tag = "floor_n_over_h";
        } else {
            out.value = (n - 1) / h;
            out.case_tag = "floor_n_minus_1_over_h";
        }
        return out;
    }
    if (tie) {
        throw std::logic_error("v_g_closed: maximizing residue is not unique");
    }
    // (n / h) * (1 + (h - i) / p) = n (p + h - i) / (h p)
    const std::int64_t numerator = n * (best_p + h - best_i);
    const std::int64_t denominator = h * best_p;
    if (numerator % denominator != 0) {
        throw std::logic_error("v_g_closed: value is not integral");
    }
    out.value = numerator / denominator;
    out.case_tag = "prime_residue";
    out.residue = best_i;
    out.prime = best_p;
    return out;
}

std::int64_t v_g_closed(std::int64_t n, std::int64_t h, std::int64_t g) {
    return v_g_closed_eval(n, h, g).value;
}

CriticalValue chi_unrestricted(std::int64_t n, std::int64_t h) {
    if (n < 2 || h < 1) {
        throw std::invalid_argument("chi_unrestricted: need n >= 2 and h >= 1");
    }
    const VgEvaluation v1 = v_g_closed_eval(n, h, 1);
    CriticalValue cv;
    cv.quantity = Quantity::chi;
    cv.kind = ValueKind::exact;
    cv.value = v1.value + 1;
    cv.source = Source::formula;
    cv.case_tag = "v1_plus_1:" + v1.case_tag;
    return cv;
}

std::int64_t rho_hat_prime(std::int64_t p, std::int64_t m, std::int64_t h) {
    if (!is_prime(static_cast<std::uint64_t>(std::max<std::int64_t>(p, 0)))) {
        throw std::invalid_argument("rho_hat_prime: p must be prime");
    }
    if (h < 1 || h > m || m > p) {
        throw std::invalid_argument("rho_hat_prime: need 1 <= h <= m <= p");
    }
    return std::min(p, h * m - h * h + 1);
}

WellDefinedness well_defined(const GroupSpec& group, std::int64_t h) {
    const std::int64_t n = group.order();
    if (h < 1 || h > n - 1) {
        return {false, WellDefinedReason::out_of_range};
    }
    if (h == 1 || h == n - 1) {
        return {true, WellDefinedReason::h_is_1_or_n_minus_1};
    }
    if (h == 2 || h == n - 2) {
        if (group.is_elementary_two_group()) {
            return {false, WellDefinedReason::elem2_blocker};
        }
        return {true, WellDefinedReason::h_2_or_n_minus_2_not_elem2};
    }
    return {true, WellDefinedReason::middle_range};
}

WellDefinedness well_defined_star(const GroupSpec& group, std::int64_t h) {
    const std::int64_t n = group.order();
    if (h < 1 || h > n - 1) {
        return {false, WellDefinedReason::out_of_range};
    }
    // Only A = G \ {0} can have size n - 1, and h^A = sigma - (n-1-h)^A with
    // sigma the sum of A, so h and n - 1 - h behave alike.
    if (h == 1 || h == n - 1) {
        return {false, WellDefinedReason::out_of_range};
    }
    if (h == n - 2) {
        return {false, WellDefinedReason::star_set_too_small};
    }
    if (h == 2 || h == n - 3) {
        if (n < 5) {
            return {false, WellDefinedReason::star_set_too_small};
        }
        if (group.is_elementary_two_group()) {
            return {false, WellDefinedReason::elem2_blocker};
        }
        return {true, WellDefinedReason::h_2_or_n_minus_2_not_elem2};
    }
    return {true, WellDefinedReason::middle_range};
}

std::int64_t two_torsion_size(const GroupSpec& group) {
    std::int64_t size = 1;
    for (const std::uint32_t d : group.invariant_factors()) {
        if (d % 2 == 0) {
            size *= 2;
        }
    }
    return size;
}

std::int64_t chi_hat3_lower_bound(std::int64_t n) {
    if (n < 11) {
        throw std::invalid_argument("chi_hat3_lower_bound: requires n >= 11");
    }
    std::int64_t p = 0;
    for (const std::uint64_t q : prime_divisors(static_cast<std::uint64_t>(n))) {
        if (q % 3 == 2) {
            p = static_cast<std::int64_t>(q);
            break;
        }
    }
    if (p != 0) {
        const std::int64_t base = (n / p) * (p + 1) / 3;  // (1 + 1/p) n / 3
        if (n == p || n == 15) {
            return base + 3;
        }
        if (n == 3 * p && p != 5) {
            return base + 2;
        }
        return base + 1;
    }
    return n / 3 + (n % 9 == 0 ? 4 : 3);
}

std::string chi_hat3_lower_bound_case(std::int64_t n) {
    for (const std::uint64_t q : prime_divisors(static_cast<std::uint64_t>(n))) {
        if (q % 3 == 2) {
            const auto p = static_cast<std::int64_t>(q);
            if (n == p || n == 15) {
                return "p2mod3:n=p_or_15";
            }
            if (n == 3 * p && p != 5) {
                return "p2mod3:n=3p";
            }
            return "p2mod3:otherwise";
        }
    }
    return n % 9 == 0 ? "no_p2mod3:9|n" : "no_p2mod3:otherwise";
}

std::vector<CriticalValue> chi_hat_closed_cases(const GroupSpec& group, std::int64_t h) {
    std::vector<CriticalValue> out;
    if (!well_defined(group, h).defined) {
        return out;
    }
    const std::int64_t n = group.order();
    const std::int64_t l = two_torsion_size(group);
    auto exact = [&](std::int64_t value, std::string tag) {
        CriticalValue cv;
        cv.quantity = Quantity::chi_hat;
        cv.kind = ValueKind::exact;
        cv.value = value;
        cv.source = Source::formula;
        cv.case_tag = std::move(tag);
        cv.group = group.to_string();
        out.push_back(std::move(cv));
    };

    if (h == 1 || h == n - 1) {
        exact(n, "trivial_h1_or_n-1");
    }
    if (group.is_cyclic() && is_prime(static_cast<std::uint64_t>(n)) && h <= n - 1) {
        exact((n - 2) / h + h + 1, "prime_cyclic");
    }
    if (!group.is_elementary_two_group()) {
        if (h == 2) {
            exact((n + l) / 2 + 1, "h2_two_torsion");
        }
        if ((n + l) / 2 - 1 <= h && h <= n - 2) {
            exact(h + 2, "large_h");
        }
    }
    if (group.is_cyclic() && n % 2 == 0 && n >= 12) {
        const std::int64_t half = n / 2;
        std::int64_t value = 0;
        if (h == 1 || h == n - 1) {
            value = n;
        } else if (h == 2 || h == half - 1) {
            value = half + 2;
        } else if (h <= half - 2) {
            value = half + 1;
        } else {
            value = h + 2;
        }
        exact(value, "even_cyclic_table");
    }
    if (group.is_cyclic() && h == 3 && n >= 11) {
        CriticalValue cv;
        cv.quantity = Quantity::chi_hat;
        cv.kind = ValueKind::lower_bound;
        cv.value = chi_hat3_lower_bound(n);
        cv.source = Source::formula;
        cv.case_tag = "h3_lower_bound:" + chi_hat3_lower_bound_case(n);
        cv.group = group.to_string();
        out.push_back(std::move(cv));
    }
    return out;
}

CriticalValue chi_hat_closed(const GroupSpec& group, std::int64_t h) {
    const WellDefinedness wd = well_defined(group, h);
    if (!wd.defined) {
        CriticalValue cv;
        cv.quantity = Quantity::chi_hat;
        cv.kind = ValueKind::undefined;
        cv.source = Source::formula;
        cv.case_tag = std::string(to_string(wd.reason));
        cv.group = group.to_string();
        return cv;
    }
    auto cases = chi_hat_closed_cases(group, h);
    if (cases.empty()) {
        CriticalValue cv;
        cv.quantity = Quantity::chi_hat;
        cv.kind = ValueKind::undefined;
        cv.source = Source::formula;
        cv.case_tag = "no_closed_form";
        cv.group = group.to_string();
        return cv;
    }
    return cases.front();
}

RhoHat3Bound rho_hat3_upper_eval(std::int64_t n, std::int64_t m) {
    if (m < 4 || m > n) {
        throw std::invalid_argument("rho_hat3_upper: need 4 <= m <= n");
    }
    const std::int64_t u = u_func(n, m, 3);
    const std::int64_t g = std::gcd(n, m - 1);
    RhoHat3Bound out;
    if (g >= 8) {
        out = {std::min(u, 3 * m - 3 - g), 1};
    } else if (g == 7 || (g <= 5 && n % 3 == 0 && m % 3 == 0) ||
               (g <= 5 && n % (3 * m - 9) == 0 && (m - 3) % 5 == 0)) {
        out = {std::min(u, 3 * m - 10), 2};
    } else if (g == 6 || (m == 6 && n % 10 == 0 && n % 3 != 0)) {
        out = {std::min(u, 3 * m - 9), 3};
    } else {
        out = {std::min(u, 3 * m - 8), 4};
    }
    out.value = std::min(out.value, n);
    return out;
}

std::int64_t rho_hat3_upper(std::int64_t n, std::int64_t m) {
    return rho_hat3_upper_eval(n, m).value;
}

CriticalValue classical_critical(const GroupSpec& group) {
    const std::int64_t n = group.order();
    if (n < 10) {
        throw std::out_of_range("classical_critical: requires n >= 10");
    }
    const auto primes = prime_divisors(static_cast<std::uint64_t>(n));
    const auto p = static_cast<std::int64_t>(primes.front());
    bool special = false;
    if (group.is_cyclic()) {
        if (n == p) {
            special = true;
        } else if (n % p == 0 && is_prime(static_cast<std::uint64_t>(n / p))) {
            const std::int64_t q = n / p;
            const auto slack = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(4 * (p - 2))));
            special = 3 <= p && p <= q && q <= p + slack + 1;
        }
    }
    CriticalValue cv;
    cv.quantity = Quantity::classical_critical;
    cv.kind = ValueKind::exact;
    cv.source = Source::formula;
    cv.group = group.to_string();
    if (special) {
        cv.value = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(4 * (n - 2))));
        cv.case_tag = "floor_2_sqrt_n_minus_2";
    } else {
        cv.value = n / p + p - 2;
        cv.case_tag = "n_over_p_plus_p_minus_2";
    }
    return cv;
}

std::int64_t lev_bound(std::int64_t n) {
    return floor_div(2 * n, 5) + 1;
}

std::int64_t four_elevenths_bound(std::int64_t n) {
    return floor_div(4 * n, 11) + 1;
}

GghPrediction ggh_predict(const GSet& a, std::int64_t h) {
    const auto m = static_cast<std::int64_t>(a.size());
    if (h < 1 || h > m - 1) {
        throw std::invalid_argument("ggh_expected_class: need 1 <= h <= |A| - 1");
    }
    const GSet l = two_torsion(a.group_ptr());
    const bool small_h = h == 2 || h == m - 2;
    if (small_h && is_coset_of_subgroup_within(a, l)) {
        return {GghClass::m_minus_1, "1"};
    }
    if (h == 1 || h == m - 1) {
        return {GghClass::exactly_m, "2a"};
    }
    if (is_coset(a)) {
        return {GghClass::exactly_m, "2b"};
    }
    if (small_h && is_coset_of_two_torsion_subgroup_minus_one(a, l)) {
        return {GghClass::exactly_m, "2c"};
    }
    if (small_h && m == 4 && is_two_cosets_of_order_two_subgroup(a)) {
        return {GghClass::exactly_m, "2d"};
    }
    return {GghClass::at_least_m_plus_1, "3"};
}

GghClass ggh_expected_class(const GSet& a, std::int64_t h) {
    return ggh_predict(a, h).cls;
}

}  // namespace critnum
