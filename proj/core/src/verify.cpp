#include "critnum/verify.hpp"

#include "critnum/formulas.hpp"
#include "critnum/number_theory.hpp"
#include "critnum/sumset.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace critnum {

std::string_view to_string(MatchStatus m) {
    switch (m) {
    case MatchStatus::agree: return "agree";
    case MatchStatus::formula_bound_respected: return "formula_bound_respected";
    case MatchStatus::mismatch: return "mismatch";
    case MatchStatus::oracle_incomplete: return "oracle_incomplete";
    }
    return "?";
}

ReportFormat parse_report_format(std::string_view text) {
    if (text == "csv") {
        return ReportFormat::csv;
    }
    if (text == "jsonl") {
        return ReportFormat::jsonl;
    }
    throw std::invalid_argument("unknown report format '" + std::string(text) + "' (csv or jsonl)");
}

std::uint64_t Report::count(MatchStatus m) const {
    return static_cast<std::uint64_t>(
        std::count_if(records.begin(), records.end(), [m](const VerificationRecord& r) { return r.match == m; }));
}

namespace {

using Records = std::vector<VerificationRecord>;
using Task = std::function<Records()>;

const std::vector<std::pair<std::string, Report (*)(const SweepPlan&)>>& suites() {
    static const std::vector<std::pair<std::string, Report (*)(const SweepPlan&)>> table = {
        {"rho", &verify_rho},
        {"vg", &verify_vg_equivalence},
        {"chi", &verify_chi},
        {"chi-hat", &verify_chi_hat_theorems},
        {"h3-conjecture", &verify_conjectures_h3},
        {"rho-hat3", &verify_rho_hat3},
        {"rho-hat-prime", &verify_rho_hat_prime},
        {"ggh", &verify_ggh},
        {"classical", &verify_classical},
        {"sum-free", &verify_sum_free},
    };
    return table;
}

Records run_tasks(std::vector<Task>& tasks, unsigned jobs) {
    std::vector<Records> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) {
                return;
            }
            try {
                results[i] = tasks[i]();
            } catch (...) {
                const std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    unsigned workers = jobs != 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, tasks.size()));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < workers; ++i) {
            pool.emplace_back(worker);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    Records out;
    for (auto& batch : results) {
        std::move(batch.begin(), batch.end(), std::back_inserter(out));
    }
    return out;
}

Report finish(const SweepPlan& plan, std::vector<Task>& tasks) {
    Report report;
    report.suite = plan.suite;
    report.records = run_tasks(tasks, plan.jobs);
    sort_records(report.records);
    return report;
}

std::vector<GroupSpec> groups_for(const SweepPlan& plan, std::uint32_t n) {
    if (plan.cyclic_only) {
        return {GroupSpec::cyclic(n)};
    }
    return groups_of_order(n);
}

void take_search(VerificationRecord& r, const SearchResult& s) {
    r.elapsed_ms = s.elapsed_ms;
    r.nodes = s.nodes;
    r.side = s.exhaustive ? "witness+exhaustive" : "witness";
    r.witness = s.witness;
}

// Which side a non-exhaustive oracle value bounds the true value from.
enum class Partial { upper, lower };

MatchStatus compare(std::int64_t formula, std::int64_t oracle, bool exhaustive, Partial partial) {
    if (exhaustive) {
        return formula == oracle ? MatchStatus::agree : MatchStatus::mismatch;
    }
    const bool contradicts = partial == Partial::upper ? oracle < formula : oracle > formula;
    return contradicts ? MatchStatus::mismatch : MatchStatus::formula_bound_respected;
}

std::string oracle_kind(bool exhaustive, Partial partial) {
    if (exhaustive) {
        return "exact";
    }
    return partial == Partial::upper ? "upper_bound" : "lower_bound";
}

void tally(ConjectureCounters& c, MatchStatus m) {
    switch (m) {
    case MatchStatus::agree: ++c.proved_equal; break;
    case MatchStatus::mismatch: ++c.mismatch; break;
    default: ++c.bound_only; break;
    }
}

VerificationRecord failed_record(VerificationRecord r, const std::exception& e) {
    r.match = MatchStatus::oracle_incomplete;
    r.kind = "none";
    r.note = e.what();
    return r;
}

Records rho_hat3_records(std::uint32_t n, const SearchBudget& budget) {
    Records out;
    const GroupPtr group = Group::cyclic(n);
    for (std::uint32_t m = 4; m <= n; ++m) {
        VerificationRecord r;
        r.group = group->spec().to_string();
        r.quantity = "rho_hat";
        r.h = 3;
        r.m = m;
        const RhoHat3Bound bound = rho_hat3_upper_eval(n, m);
        r.formula_value = bound.value;
        r.case_tag = "rho_hat3_upper:row" + std::to_string(bound.row);
        try {
            const SearchResult s = rho_hat_exact(group, static_cast<int>(m), 3, budget);
            take_search(r, s);
            r.oracle_value = s.value;
            r.kind = oracle_kind(s.exhaustive, Partial::upper);
            // Exhaustive: the bound must hold with equality. Partial: a found
            // set below the bound already refutes equality.
            r.match = compare(bound.value, s.value, s.exhaustive, Partial::upper);
            if (s.exhaustive && s.value > bound.value) {
                r.note = "upper bound violated";
            } else if (r.match == MatchStatus::mismatch) {
                r.note = "bound not attained";
            }
        } catch (const std::exception& e) {
            r = failed_record(std::move(r), e);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

void SweepPlan::validate() const {
    const auto& table = suites();
    if (std::none_of(table.begin(), table.end(), [&](const auto& s) { return s.first == suite; })) {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    if (n_min > n_max || n_max == 0) {
        throw std::invalid_argument("empty n range");
    }
    if (h_min > h_max || h_max < 1) {
        throw std::invalid_argument("empty h range");
    }
    budget.validate();
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& s : suites()) {
        out.push_back(s.first);
    }
    return out;
}

void sort_records(std::vector<VerificationRecord>& records) {
    std::stable_partition(records.begin(), records.end(),
                          [](const VerificationRecord& r) { return r.match == MatchStatus::mismatch; });
}

Report verify_rho(const SweepPlan& plan) {
    std::vector<Task> tasks;
    for (std::uint32_t n = std::max(2u, plan.n_min); n <= plan.n_max; ++n) {
        for (const GroupSpec& spec : groups_for(plan, n)) {
            for (std::uint32_t m = 1; m <= n; ++m) {
                tasks.emplace_back([spec, n, m, &plan] {
                    Records out;
                    const GroupPtr group = Group::make(spec);
                    for (int h = std::max(1, plan.h_min); h <= plan.h_max; ++h) {
                        VerificationRecord r;
                        r.group = spec.to_string();
                        r.quantity = "rho";
                        r.h = h;
                        r.m = m;
                        r.formula_value = u_func(n, m, h);
                        r.case_tag = "u_divisor_min";
                        try {
                            const SearchResult s = rho_exact(group, static_cast<int>(m), h, plan.budget);
                            take_search(r, s);
                            r.oracle_value = s.value;
                            r.kind = oracle_kind(s.exhaustive, Partial::upper);
                            r.match = compare(*r.formula_value, s.value, s.exhaustive, Partial::upper);
                        } catch (const std::exception& e) {
                            r = failed_record(std::move(r), e);
                        }
                        out.push_back(std::move(r));
                    }
                    return out;
                });
            }
        }
    }
    return finish(plan, tasks);
}

Report verify_vg_equivalence(const SweepPlan& plan) {
    std::vector<Task> tasks;
    for (std::uint32_t n = std::max(1u, plan.n_min); n <= plan.n_max; ++n) {
        tasks.emplace_back([n, &plan] {
            Records out;
            for (int h = std::max(2, plan.h_min); h <= plan.h_max; ++h) {
                for (int g = 1; g <= h; ++g) {
                    VerificationRecord r;
                    r.group = "Z" + std::to_string(n);
                    r.quantity = "v_g";
                    r.h = h;
                    r.g = g;
                    r.kind = "exact";
                    r.side = "divisor_max";
                    r.oracle_value = v_g_naive(n, h, g);
                    try {
                        const VgEvaluation closed = v_g_closed_eval(n, h, g);
                        r.formula_value = closed.value;
                        r.case_tag = closed.case_tag;
                        r.match = closed.value == *r.oracle_value ? MatchStatus::agree : MatchStatus::mismatch;
                    } catch (const std::logic_error& e) {
                        r.match = MatchStatus::mismatch;
                        r.note = e.what();
                    }
                    out.push_back(std::move(r));
                }
            }
            return out;
        });
    }
    return finish(plan, tasks);
}

Report verify_chi(const SweepPlan& plan) {
    std::vector<Task> tasks;
    for (std::uint32_t n = std::max(2u, plan.n_min); n <= plan.n_max; ++n) {
        for (const GroupSpec& spec : groups_for(plan, n)) {
            for (int h = std::max(1, plan.h_min); h <= plan.h_max; ++h) {
                tasks.emplace_back([spec, n, h, &plan] {
                    VerificationRecord r;
                    r.group = spec.to_string();
                    r.quantity = "chi";
                    r.h = h;
                    const CriticalValue f = chi_unrestricted(n, h);
                    r.formula_value = f.value;
                    r.case_tag = f.case_tag;
                    try {
                        const CriticalSearch s = chi_exact(Group::make(spec), h, plan.budget);
                        take_search(r, s.detail);
                        r.oracle_value = s.value.value;
                        r.kind = oracle_kind(s.detail.exhaustive, Partial::lower);
                        r.match = compare(*f.value, *s.value.value, s.detail.exhaustive, Partial::lower);
                    } catch (const std::exception& e) {
                        r = failed_record(std::move(r), e);
                    }
                    return Records{std::move(r)};
                });
            }
        }
    }
    return finish(plan, tasks);
}

Report verify_chi_hat_theorems(const SweepPlan& plan) {
    std::vector<Task> tasks;
    for (std::uint32_t n = std::max(2u, plan.n_min); n <= plan.n_max; ++n) {
        for (const GroupSpec& spec : groups_for(plan, n)) {
            const int h_hi = std::min(plan.h_max, static_cast<int>(n) - 1);
            for (int h = std::max(1, plan.h_min); h <= h_hi; ++h) {
                const WellDefinedness wd = well_defined(spec, h);
                std::vector<CriticalValue> cases;
                for (CriticalValue& cv : chi_hat_closed_cases(spec, h)) {
                    if (cv.kind == ValueKind::exact) {
                        cases.push_back(std::move(cv));
                    }
                }
                if (wd.defined && cases.empty()) {
                    continue;
                }
                if (!wd.defined) {
                    cases.push_back(chi_hat_closed(spec, h));
                }
                tasks.emplace_back([spec, h, cases, &plan] {
                    Records out;
                    const GroupPtr group = Group::make(spec);
                    std::optional<CriticalSearch> search;
                    std::string error;
                    try {
                        search = chi_hat_exact(group, h, plan.budget);
                    } catch (const std::exception& e) {
                        error = e.what();
                    }
                    for (std::size_t i = 0; i < cases.size(); ++i) {
                        const CriticalValue& f = cases[i];
                        VerificationRecord r;
                        r.group = spec.to_string();
                        r.quantity = "chi_hat";
                        r.h = h;
                        r.formula_value = f.value;
                        r.case_tag = f.case_tag;
                        if (!search) {
                            r.match = MatchStatus::oracle_incomplete;
                            r.kind = "none";
                            r.note = error;
                            out.push_back(std::move(r));
                            continue;
                        }
                        const CriticalValue& o = search->value;
                        const bool exhaustive = search->detail.exhaustive;
                        if (i == 0) {
                            take_search(r, search->detail);
                        } else {
                            r.side = exhaustive ? "witness+exhaustive" : "witness";
                        }
                        if (f.kind == ValueKind::undefined || o.kind == ValueKind::undefined) {
                            r.oracle_value = o.value;
                            r.kind = to_string(o.kind);
                            r.match = f.kind == o.kind ? MatchStatus::agree : MatchStatus::mismatch;
                            if (f.kind != o.kind && o.kind != ValueKind::undefined && !exhaustive) {
                                r.match = MatchStatus::oracle_incomplete;
                            }
                        } else {
                            r.oracle_value = o.value;
                            r.kind = oracle_kind(exhaustive, Partial::lower);
                            r.match = compare(*f.value, *o.value, exhaustive, Partial::lower);
                        }
                        // Lower-bound side from the explicit constructions.
                        if (f.case_tag == "h2_two_torsion") {
                            const WitnessSet w = construct_two_torsion_plus_halforbit(group);
                            if (!validate_witness(w) || static_cast<std::int64_t>(w.elements.size()) + 1 != *f.value) {
                                r.match = MatchStatus::mismatch;
                                r.note = "construction L+K does not reach the formula";
                            }
                            r.side += "+construction";
                        } else if (f.case_tag == "even_cyclic_table" && h >= 3 &&
                                   h <= static_cast<int>(spec.order()) / 2 - 2) {
                            const WitnessSet w = construct_even_elements(spec.order(), h);
                            if (!validate_witness(w) || static_cast<std::int64_t>(w.elements.size()) + 1 != *f.value) {
                                r.match = MatchStatus::mismatch;
                                r.note = "even-residue construction does not reach the formula";
                            }
                            r.side += "+construction";
                        }
                        out.push_back(std::move(r));
                    }
                    return out;
                });
            }
        }
    }
    return finish(plan, tasks);
}

Report verify_conjectures_h3(const SweepPlan& plan) {
    std::vector<Task> tasks;
    for (std::uint32_t n = std::max(11u, plan.n_min); n <= plan.n_max; ++n) {
        tasks.emplace_back([n, &plan] {
            VerificationRecord r;
            const GroupPtr group = Group::cyclic(n);
            r.group = group->spec().to_string();
            r.quantity = "chi_hat";
            r.h = 3;
            const std::int64_t bound = chi_hat3_lower_bound(n);
            r.formula_value = bound;
            r.case_tag = "h3_lower_bound:" + chi_hat3_lower_bound_case(n);
            if (n % 2 == 1) {
                r.bounds.emplace_back("lev_2n_over_5_plus_1", lev_bound(n));
            }
            r.bounds.emplace_back("four_n_over_11_plus_1", four_elevenths_bound(n));
            if (n % 2 == 0 && n >= 12) {
                for (const CriticalValue& cv : chi_hat_closed_cases(group->spec(), 3)) {
                    if (cv.case_tag == "even_cyclic_table") {
                        r.bounds.emplace_back("even_cyclic_table", *cv.value);
                    }
                }
            }
            try {
                const CriticalSearch s = chi_hat_exact(group, 3, plan.budget);
                take_search(r, s.detail);
                r.oracle_value = s.value.value;
                r.kind = oracle_kind(s.detail.exhaustive, Partial::lower);
                r.match = compare(bound, *s.value.value, s.detail.exhaustive, Partial::lower);
                if (r.match == MatchStatus::mismatch) {
                    r.note = *s.value.value < bound ? "lower bound violated" : "bound not attained";
                }
                for (const auto& [name, value] : r.bounds) {
                    if (name == "even_cyclic_table" && s.detail.exhaustive && value != *s.value.value) {
                        r.match = MatchStatus::mismatch;
                        r.note = "even table disagrees";
                    }
                }
            } catch (const std::exception& e) {
                r = failed_record(std::move(r), e);
            }
            Records out{std::move(r)};
            if (n <= plan.rho_hat_n_max) {
                Records rho = rho_hat3_records(n, plan.budget);
                std::move(rho.begin(), rho.end(), std::back_inserter(out));
            }
            return out;
        });
    }
    Report report = finish(plan, tasks);
    for (const auto& r : report.records) {
        tally(report.conjecture, r.match);
    }
    return report;
}

Report verify_rho_hat3(const SweepPlan& plan) {
    std::vector<Task> tasks;
    for (std::uint32_t n = std::max(4u, plan.n_min); n <= plan.n_max; ++n) {
        tasks.emplace_back([n, &plan] { return rho_hat3_records(n, plan.budget); });
    }
    Report report = finish(plan, tasks);
    for (const auto& r : report.records) {
        tally(report.conjecture, r.match);
    }
    return report;
}

Report verify_rho_hat_prime(const SweepPlan& plan) {
    std::vector<Task> tasks;
    for (std::uint32_t p = std::max(2u, plan.n_min); p <= plan.n_max; ++p) {
        if (!is_prime(p)) {
            continue;
        }
        for (std::uint32_t m = 1; m <= p; ++m) {
            tasks.emplace_back([p, m, &plan] {
                Records out;
                const GroupPtr group = Group::cyclic(p);
                const int h_hi = std::min(plan.h_max, static_cast<int>(m));
                for (int h = std::max(1, plan.h_min); h <= h_hi; ++h) {
                    VerificationRecord r;
                    r.group = group->spec().to_string();
                    r.quantity = "rho_hat";
                    r.h = h;
                    r.m = m;
                    r.formula_value = rho_hat_prime(p, m, h);
                    r.case_tag = "min_p_hm_minus_h2_plus_1";
                    try {
                        const SearchResult s = rho_hat_exact(group, static_cast<int>(m), h, plan.budget);
                        take_search(r, s);
                        r.oracle_value = s.value;
                        r.kind = oracle_kind(s.exhaustive, Partial::upper);
                        r.match = compare(*r.formula_value, s.value, s.exhaustive, Partial::upper);
                    } catch (const std::exception& e) {
                        r = failed_record(std::move(r), e);
                    }
                    out.push_back(std::move(r));
                }
                return out;
            });
        }
    }
    return finish(plan, tasks);
}

namespace {

struct GghCell {
    std::uint64_t checked = 0;
    std::uint64_t agreed = 0;
    std::optional<WitnessSet> counterexample;
    std::string note;
};

GghClass observed_class(std::size_t size, std::size_t m) {
    if (size + 1 == m) {
        return GghClass::m_minus_1;
    }
    return size == m ? GghClass::exactly_m : GghClass::at_least_m_plus_1;
}

}  // namespace

Report verify_ggh(const SweepPlan& plan) {
    if (plan.n_max > 20) {
        throw std::invalid_argument("ggh suite enumerates every subset; n_max must be at most 20");
    }
    std::vector<Task> tasks;
    std::vector<std::map<std::string, std::uint64_t>> coverage;
    std::vector<std::pair<std::uint32_t, GroupSpec>> jobs;
    for (std::uint32_t n = std::max(2u, plan.n_min); n <= plan.n_max; ++n) {
        for (const GroupSpec& spec : groups_for(plan, n)) {
            jobs.emplace_back(n, spec);
        }
    }
    coverage.resize(jobs.size());
    for (std::size_t job = 0; job < jobs.size(); ++job) {
        tasks.emplace_back([job, &jobs, &coverage, &plan] {
            const auto& [n, spec] = jobs[job];
            const GroupPtr group = Group::make(spec);
            // cells[m][h]
            std::vector<std::vector<GghCell>> cells(n + 1, std::vector<GghCell>(n + 1));
            const std::uint64_t limit = std::uint64_t{1} << n;
            for (std::uint64_t mask = 1; mask < limit; ++mask) {
                const auto m = static_cast<std::size_t>(std::popcount(mask));
                if (m < 2) {
                    continue;
                }
                Bits bits(n, mask);
                const GSet a(group, std::move(bits));
                const int h_hi = std::min(plan.h_max, static_cast<int>(m) - 1);
                if (h_hi < std::max(1, plan.h_min)) {
                    continue;
                }
                const std::vector<GSet> layers = restricted_layers(a, h_hi);
                for (int h = std::max(1, plan.h_min); h <= h_hi; ++h) {
                    GghCell& cell = cells[m][static_cast<std::size_t>(h)];
                    const GghPrediction predicted = ggh_predict(a, h);
                    ++coverage[job]["case_" + predicted.case_tag];
                    const std::size_t size = layers[static_cast<std::size_t>(h)].size();
                    ++cell.checked;
                    const bool ok = size + 1 >= m && observed_class(size, m) == predicted.cls;
                    if (ok) {
                        ++cell.agreed;
                    } else if (!cell.counterexample) {
                        WitnessSet w{spec};
                        w.quantity = "ggh_class";
                        w.certifies = Certificate::restricted_size;
                        w.h = h;
                        w.value = static_cast<std::int64_t>(size);
                        w.elements = a.indices();
                        cell.counterexample = std::move(w);
                        cell.note = "predicted " + std::string(to_string(predicted.cls)) + " (case " +
                                    predicted.case_tag + "), observed size " + std::to_string(size);
                    }
                }
            }
            Records out;
            for (std::size_t m = 2; m <= n; ++m) {
                for (std::size_t h = 1; h < m; ++h) {
                    GghCell& cell = cells[m][h];
                    if (cell.checked == 0) {
                        continue;
                    }
                    VerificationRecord r;
                    r.group = spec.to_string();
                    r.quantity = "ggh_class";
                    r.h = static_cast<std::int64_t>(h);
                    r.m = static_cast<std::int64_t>(m);
                    r.formula_value = static_cast<std::int64_t>(cell.agreed);
                    r.oracle_value = static_cast<std::int64_t>(cell.checked);
                    r.kind = "count";
                    r.side = "exhaustive_enumeration";
                    r.nodes = cell.checked;
                    r.match = cell.agreed == cell.checked ? MatchStatus::agree : MatchStatus::mismatch;
                    r.note = cell.note;
                    r.witness = std::move(cell.counterexample);
                    out.push_back(std::move(r));
                }
            }
            return out;
        });
    }
    Report report = finish(plan, tasks);
    for (const auto& c : coverage) {
        for (const auto& [key, count] : c) {
            report.coverage[key] += count;
        }
    }
    return report;
}

Report verify_classical(const SweepPlan& plan) {
    std::vector<Task> tasks;
    for (std::uint32_t n = std::max(10u, plan.n_min); n <= plan.n_max; ++n) {
        for (const GroupSpec& spec : groups_for(plan, n)) {
            tasks.emplace_back([spec, &plan] {
                VerificationRecord r;
                r.group = spec.to_string();
                r.quantity = "classical_critical";
                const CriticalValue f = classical_critical(spec);
                r.formula_value = f.value;
                r.case_tag = f.case_tag;
                try {
                    const SearchResult s = sigma_critical_exact(Group::make(spec), plan.budget);
                    take_search(r, s);
                    r.oracle_value = s.value;
                    r.kind = oracle_kind(s.exhaustive, Partial::lower);
                    r.match = compare(*f.value, s.value, s.exhaustive, Partial::lower);
                } catch (const std::exception& e) {
                    r = failed_record(std::move(r), e);
                }
                return Records{std::move(r)};
            });
        }
    }
    return finish(plan, tasks);
}

Report verify_sum_free(const SweepPlan& plan) {
    std::vector<Task> tasks;
    for (std::uint32_t n = std::max(2u, plan.n_min); n <= plan.n_max; ++n) {
        for (const int k : {2, 3}) {
            tasks.emplace_back([n, k, &plan] {
                VerificationRecord r;
                r.group = "Z" + std::to_string(n);
                r.quantity = k == 2 ? "sum_free" : "three_one_sum_free";
                r.h = k == 2 ? 3 : 4;
                r.g = k == 2 ? 1 : 2;
                const VgEvaluation f = v_g_closed_eval(n, *r.h, *r.g);
                r.formula_value = f.value;
                r.case_tag = "v_g:" + f.case_tag;
                try {
                    const SearchResult s =
                        k == 2 ? max_sum_free(n, plan.budget) : max_three_one_sum_free(n, plan.budget);
                    take_search(r, s);
                    r.oracle_value = s.value;
                    r.kind = oracle_kind(s.exhaustive, Partial::lower);
                    r.match = compare(f.value, s.value, s.exhaustive, Partial::lower);
                } catch (const std::exception& e) {
                    r = failed_record(std::move(r), e);
                }
                return Records{std::move(r)};
            });
        }
    }
    return finish(plan, tasks);
}

Report run_suite(const SweepPlan& plan) {
    plan.validate();
    for (const auto& [name, fn] : suites()) {
        if (name == plan.suite) {
            return fn(plan);
        }
    }
    throw std::invalid_argument("unknown suite '" + plan.suite + "'");
}

namespace {

std::string opt(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string{};
}

std::string millis(double ms, bool deterministic) {
    if (deterministic) {
        return "0";
    }
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << ms;
    return out.str();
}

nlohmann::ordered_json json_opt(const std::optional<std::int64_t>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string format_report(const Report& report, ReportFormat format, bool deterministic) {
    std::ostringstream out;
    if (format == ReportFormat::csv) {
        out << kCsvHeader << '\n';
        for (const auto& r : report.records) {
            out << r.group << ',' << r.quantity << ',' << opt(r.h) << ',' << opt(r.m) << ',' << opt(r.g) << ','
                << opt(r.formula_value) << ',' << opt(r.oracle_value) << ',' << r.kind << ',' << to_string(r.match)
                << ',' << r.witness_ref << ',' << millis(r.elapsed_ms, deterministic) << ',' << r.nodes << '\n';
        }
        return out.str();
    }
    for (const auto& r : report.records) {
        nlohmann::ordered_json j;
        j["group"] = r.group;
        j["quantity"] = r.quantity;
        j["h"] = json_opt(r.h);
        j["m"] = json_opt(r.m);
        j["g"] = json_opt(r.g);
        j["formula_value"] = json_opt(r.formula_value);
        j["oracle_value"] = json_opt(r.oracle_value);
        j["kind"] = r.kind;
        j["match"] = to_string(r.match);
        j["witness_file"] = r.witness_ref;
        j["elapsed_ms"] = deterministic ? 0.0 : r.elapsed_ms;
        j["nodes"] = r.nodes;
        j["case_tag"] = r.case_tag;
        j["side"] = r.side;
        auto bounds = nlohmann::ordered_json::object();
        for (const auto& [name, value] : r.bounds) {
            bounds[name] = value;
        }
        j["bounds"] = bounds;
        j["note"] = r.note;
        out << j.dump() << '\n';
    }
    return out.str();
}

void emit_report(Report& report, const std::filesystem::path& path, ReportFormat format, bool deterministic) {
    const std::filesystem::path witness_path = path.string() + ".witnesses.jsonl";
    std::vector<WitnessSet> witnesses;
    for (auto& r : report.records) {
        if (r.witness) {
            witnesses.push_back(*r.witness);
            r.witness_ref = witness_path.filename().string() + "#" + std::to_string(witnesses.size());
        }
    }
    if (!witnesses.empty()) {
        write_witness_file(witness_path, witnesses);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << format_report(report, format, deterministic);
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

}  // namespace critnum
