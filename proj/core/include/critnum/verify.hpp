#pragma once

#include "critnum/oracle.hpp"
#include "critnum/witness.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace critnum {

enum class MatchStatus { agree, formula_bound_respected, mismatch, oracle_incomplete };
std::string_view to_string(MatchStatus m);

/// One checked instance. The CSV report carries the first twelve columns;
/// JSONL adds the remaining fields.
struct VerificationRecord {
    std::string group;
    std::string quantity;
    std::optional<std::int64_t> h;
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> g;
    std::optional<std::int64_t> formula_value;
    std::optional<std::int64_t> oracle_value;
    std::string kind;  // what the oracle value is: exact, lower_bound, upper_bound, undefined, count
    MatchStatus match = MatchStatus::oracle_incomplete;
    std::string witness_ref;  // "<file>#<line>", filled in by emit_report
    double elapsed_ms = 0.0;
    std::uint64_t nodes = 0;

    std::string case_tag;  // formula rule that produced formula_value
    std::string side;      // "witness+exhaustive", "witness", "construction+exhaustive", ...
    std::vector<std::pair<std::string, std::int64_t>> bounds;  // informational bound columns
    std::string note;
    std::optional<WitnessSet> witness;
};

enum class ReportFormat { csv, jsonl };
ReportFormat parse_report_format(std::string_view text);

struct SweepPlan {
    std::string suite;
    std::uint32_t n_min = 1;
    std::uint32_t n_max = 12;
    int h_min = 1;
    int h_max = 4;
    bool cyclic_only = false;
    SearchBudget budget;
    /// Largest n for the rho^(Z_n, m, 3) part of the h3-conjecture suite.
    std::uint32_t rho_hat_n_max = 24;
    unsigned jobs = 0;  // 0: hardware concurrency
    /// Zero out timings so identical plans give byte-identical reports.
    bool deterministic = false;

    /// Throws std::invalid_argument for an unknown suite or empty range.
    void validate() const;
};

/// Proved-equal / bound-only / mismatch tallies for conjectured equalities.
struct ConjectureCounters {
    std::uint64_t proved_equal = 0;
    std::uint64_t bound_only = 0;
    std::uint64_t mismatch = 0;
};

struct Report {
    std::string suite;
    std::vector<VerificationRecord> records;  // mismatches first, then by instance key
    ConjectureCounters conjecture;
    std::map<std::string, std::uint64_t> coverage;  // suite specific hit counts

    std::uint64_t count(MatchStatus m) const;
    bool has_mismatch() const { return count(MatchStatus::mismatch) > 0; }
};

std::vector<std::string> suite_names();

Report verify_rho(const SweepPlan& plan);
Report verify_vg_equivalence(const SweepPlan& plan);
Report verify_chi(const SweepPlan& plan);
Report verify_chi_hat_theorems(const SweepPlan& plan);
Report verify_conjectures_h3(const SweepPlan& plan);
Report verify_rho_hat3(const SweepPlan& plan);
Report verify_rho_hat_prime(const SweepPlan& plan);
Report verify_ggh(const SweepPlan& plan);
Report verify_classical(const SweepPlan& plan);
Report verify_sum_free(const SweepPlan& plan);

/// Dispatches on plan.suite.
Report run_suite(const SweepPlan& plan);

/// Moves mismatches to the front; otherwise keeps sweep order, which is
/// ordered by instance key (n, group, h, m, g) by construction.
void sort_records(std::vector<VerificationRecord>& records);

/// Writes the report to `path` and any witnesses to
/// `<path>.witnesses.jsonl`, setting each record's witness_ref.
void emit_report(Report& report, const std::filesystem::path& path, ReportFormat format, bool deterministic);

/// The report text without touching the filesystem (witness_ref left as is).
std::string format_report(const Report& report, ReportFormat format, bool deterministic);

inline constexpr std::string_view kCsvHeader =
    "group,quantity,h,m,g,formula_value,oracle_value,kind,match,witness_file,elapsed_ms,nodes";

}  // namespace critnum
