#include "critnum_cli/cli.hpp"

#include "critnum/formulas.hpp"
#include "critnum/number_theory.hpp"
#include "critnum/oracle.hpp"
#include "critnum/verify.hpp"
#include "critnum/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace critnum::cli {

namespace {

using json = nlohmann::ordered_json;

struct BudgetFlags {
    double seconds = 0.0;
    std::uint64_t max_nodes = 0;
    std::uint32_t threshold = 0;
    CLI::Option* seconds_opt = nullptr;
    CLI::Option* nodes_opt = nullptr;
    CLI::Option* threshold_opt = nullptr;

    void attach(CLI::App* app) {
        seconds_opt = app->add_option("--budget-seconds", seconds, "Wall-clock limit per search")
                          ->check(CLI::PositiveNumber);
        nodes_opt = app->add_option("--max-nodes", max_nodes, "Node limit per search")->check(CLI::PositiveNumber);
        threshold_opt = app->add_option("--threshold", threshold,
                                        "Largest n searched exhaustively; larger groups only get a short probe")
                            ->check(CLI::PositiveNumber);
    }

    // Defaults, then $CRITNUM_BUDGET_SECONDS, then flags.
    SearchBudget resolve(std::uint32_t default_threshold) const {
        SearchBudget b;
        b.exhaustive_threshold_n = default_threshold;
        b = apply_env_overrides(b);
        if (seconds_opt->count() > 0) {
            b.max_seconds = seconds;
        }
        if (nodes_opt->count() > 0) {
            b.max_nodes = max_nodes;
        }
        if (threshold_opt->count() > 0) {
            b.exhaustive_threshold_n = threshold;
        }
        b.validate();
        return b;
    }
};

struct Instance {
    std::string quantity;
    std::string group;
    std::uint32_t n = 0;
    int h = 0;
    int m = 0;
    int g = 0;
    CLI::Option* group_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* h_opt = nullptr;
    CLI::Option* m_opt = nullptr;
    CLI::Option* g_opt = nullptr;

    void attach(CLI::App* app, bool with_quantity = true) {
        if (with_quantity) {
            app->add_option("--quantity,-q", quantity, "Quantity to evaluate")->required();
        }
        group_opt = app->add_option("--group", group, "Group, e.g. Z12 or Z2xZ6");
        n_opt = app->add_option("--n,-n", n, "Group order (all isomorphism types when no --group)")
                    ->check(CLI::PositiveNumber);
        h_opt = app->add_option("--h", h, "Number of summands");
        m_opt = app->add_option("--m,-m", m, "Set size");
        g_opt = app->add_option("--g,-g", g, "Target element index, or the v_g parameter");
    }

    bool has_group() const { return group_opt->count() > 0; }
    bool has_n() const { return n_opt->count() > 0; }

    int need_h() const { return need(h_opt, h, "--h"); }
    int need_m() const { return need(m_opt, m, "--m"); }
    int need_g() const { return need(g_opt, g, "--g"); }

    std::uint32_t order() const {
        if (has_group()) {
            const std::uint32_t o = GroupSpec::parse(group).order();
            if (has_n() && n != o) {
                throw std::invalid_argument("--n disagrees with the order of --group");
            }
            return o;
        }
        if (!has_n()) {
            throw std::invalid_argument("one of --group or --n is required");
        }
        return n;
    }

    /// --group, or every group of order --n.
    std::vector<GroupSpec> groups() const {
        if (has_group()) {
            return {GroupSpec::parse(group)};
        }
        return groups_of_order(order());
    }

private:
    static int need(const CLI::Option* opt, int value, const char* name) {
        if (opt->count() == 0) {
            throw std::invalid_argument(std::string(name) + " is required for this quantity");
        }
        return value;
    }
};

CriticalValue formula_value(Quantity q, std::string tag, std::int64_t value, ValueKind kind = ValueKind::exact) {
    CriticalValue cv;
    cv.quantity = q;
    cv.kind = kind;
    cv.value = value;
    cv.source = Source::formula;
    cv.case_tag = std::move(tag);
    return cv;
}

CriticalValue no_closed_form(Quantity q, std::string tag = "no_closed_form") {
    CriticalValue cv;
    cv.quantity = q;
    cv.kind = ValueKind::undefined;
    cv.source = Source::formula;
    cv.case_tag = std::move(tag);
    return cv;
}

CriticalValue rho_hat_formula(const GroupSpec& spec, int m, int h) {
    const std::int64_t n = spec.order();
    if (spec.is_cyclic() && is_prime(static_cast<std::uint64_t>(n))) {
        return formula_value(Quantity::rho_hat, "min_p_hm_minus_h2_plus_1", rho_hat_prime(n, m, h));
    }
    if (spec.is_cyclic() && h == 3 && m >= 4) {
        const RhoHat3Bound b = rho_hat3_upper_eval(n, m);
        return formula_value(Quantity::rho_hat, "rho_hat3_upper:row" + std::to_string(b.row), b.value,
                             ValueKind::upper_bound);
    }
    return no_closed_form(Quantity::rho_hat);
}

CriticalValue chi_hat_star_formula(const GroupSpec& spec, int h) {
    const WellDefinedness wd = well_defined_star(spec, h);
    if (!wd.defined) {
        return no_closed_form(Quantity::chi_hat_star, std::string(to_string(wd.reason)));
    }
    CriticalValue cv = chi_hat_closed(spec, h);
    if (cv.kind == ValueKind::undefined) {
        return no_closed_form(Quantity::chi_hat_star, cv.case_tag);
    }
    cv.quantity = Quantity::chi_hat_star;
    cv.case_tag = "star_equality:" + cv.case_tag;
    return cv;
}

int do_compute(const Instance& in, std::ostream& out) {
    const Quantity q = parse_quantity(in.quantity);
    auto emit = [&](CriticalValue cv, const std::string& group) {
        cv.group = group;
        out << to_json(cv) << '\n';
    };
    switch (q) {
    case Quantity::u:
    case Quantity::rho: {
        const std::uint32_t n = in.order();
        const std::int64_t value = u_func(n, in.need_m(), in.need_h());
        emit(formula_value(q, "u_divisor_min", value), in.has_group() ? GroupSpec::parse(in.group).to_string() : "");
        return kOk;
    }
    case Quantity::v_g: {
        const VgEvaluation v = v_g_closed_eval(in.order(), in.need_h(), in.need_g());
        emit(formula_value(q, v.case_tag, v.value), "");
        return kOk;
    }
    case Quantity::chi: {
        const CriticalValue cv = chi_unrestricted(in.order(), in.need_h());
        emit(cv, in.has_group() ? GroupSpec::parse(in.group).to_string() : "");
        return kOk;
    }
    case Quantity::chi_star:
        in.need_h();
        emit(no_closed_form(q), in.has_group() ? GroupSpec::parse(in.group).to_string() : "");
        return kOk;
    default: break;
    }
    for (const GroupSpec& spec : in.groups()) {
        switch (q) {
        case Quantity::rho_hat: emit(rho_hat_formula(spec, in.need_m(), in.need_h()), spec.to_string()); break;
        case Quantity::chi_hat: emit(chi_hat_closed(spec, in.need_h()), spec.to_string()); break;
        case Quantity::chi_hat_star: emit(chi_hat_star_formula(spec, in.need_h()), spec.to_string()); break;
        case Quantity::classical_critical: emit(classical_critical(spec), spec.to_string()); break;
        default: break;
        }
    }
    return kOk;
}

json witness_json(const std::optional<WitnessSet>& w) {
    return w ? json::parse(to_json_line(*w)) : json(nullptr);
}

json search_json(const std::string& quantity, const GroupSpec& spec, const SearchResult& s, const std::string& kind) {
    json j;
    j["quantity"] = quantity;
    j["group"] = spec.to_string();
    j["value"] = s.value;
    j["kind"] = kind;
    j["exhaustive"] = s.exhaustive;
    j["nodes"] = s.nodes;
    j["elapsed_ms"] = s.elapsed_ms;
    j["witness"] = witness_json(s.witness);
    return j;
}

int do_oracle(const Instance& in, const BudgetFlags& flags, bool restricted_flag, std::ostream& out) {
    const std::string& q = in.quantity;
    if (q == "sum_free" || q == "three_one_sum_free") {
        const std::uint32_t n = in.order();
        const SearchBudget b = flags.resolve(kMaxOracleOrder);
        const SearchResult s = q == "sum_free" ? max_sum_free(n, b) : max_three_one_sum_free(n, b);
        out << search_json(q, GroupSpec::cyclic(n), s, s.exhaustive ? "exact" : "lower_bound").dump() << '\n';
        return kOk;
    }
    if (q == "deficient") {
        const SearchBudget b = flags.resolve(30);
        for (const GroupSpec& spec : in.groups()) {
            DeficientQuery dq;
            dq.h = in.need_h();
            dq.restricted = restricted_flag;
            dq.target = Element{static_cast<std::uint32_t>(in.need_g())};
            const SearchResult s = max_deficient(Group::make(spec), dq, b);
            json j = search_json(q, spec, s, s.exhaustive ? "exact" : "lower_bound");
            j["h"] = dq.h;
            j["g"] = dq.target.index;
            j["restricted"] = dq.restricted;
            out << j.dump() << '\n';
        }
        return kOk;
    }
    const Quantity quantity = parse_quantity(q);
    for (const GroupSpec& spec : in.groups()) {
        const GroupPtr group = Group::make(spec);
        switch (quantity) {
        case Quantity::rho:
        case Quantity::rho_hat: {
            const SearchBudget b = flags.resolve(24);
            const int m = in.need_m();
            const int h = in.need_h();
            const SearchResult s = quantity == Quantity::rho ? rho_exact(group, m, h, b) : rho_hat_exact(group, m, h, b);
            json j = search_json(q, spec, s, s.exhaustive ? "exact" : "upper_bound");
            j["m"] = m;
            j["h"] = h;
            out << j.dump() << '\n';
            break;
        }
        case Quantity::chi:
        case Quantity::chi_star:
        case Quantity::chi_hat:
        case Quantity::chi_hat_star: {
            const SearchBudget b = flags.resolve(30);
            const int h = in.need_h();
            const bool star = quantity == Quantity::chi_star || quantity == Quantity::chi_hat_star;
            const bool restricted = quantity == Quantity::chi_hat || quantity == Quantity::chi_hat_star;
            const CriticalSearch s = restricted ? chi_hat_exact(group, h, b, star) : chi_exact(group, h, b, star);
            json j = search_json(q, spec, s.detail, std::string(to_string(s.value.kind)));
            j["h"] = h;
            j["value"] = s.value.value ? json(*s.value.value) : json(nullptr);
            j["max_deficient"] = s.detail.value;
            j["targets"] = s.targets;
            out << j.dump() << '\n';
            break;
        }
        case Quantity::classical_critical: {
            const SearchResult s = sigma_critical_exact(group, flags.resolve(30));
            out << search_json(q, spec, s, s.exhaustive ? "exact" : "lower_bound").dump() << '\n';
            break;
        }
        default: throw std::invalid_argument("no oracle for quantity '" + q + "'");
        }
    }
    return kOk;
}

struct WitnessOpts {
    std::string construct;
    std::string validate;
    std::uint32_t d = 0;
};

int do_witness(const WitnessOpts& o, const Instance& in, std::ostream& out) {
    if (!o.validate.empty() == !o.construct.empty()) {
        throw std::invalid_argument("give exactly one of --construct or --validate");
    }
    if (!o.validate.empty()) {
        const std::vector<WitnessSet> witnesses = read_witness_file(o.validate);
        int bad = 0;
        for (std::size_t i = 0; i < witnesses.size(); ++i) {
            const std::string reason = check_witness(witnesses[i]);
            out << (i + 1) << ": " << (reason.empty() ? "ok" : "invalid: " + reason) << '\n';
            bad += reason.empty() ? 0 : 1;
        }
        out << witnesses.size() - static_cast<std::size_t>(bad) << " of " << witnesses.size() << " witnesses valid\n";
        return bad == 0 ? kOk : kFailure;
    }
    WitnessSet w = [&] {
        if (o.construct == "coset_stripe") {
            return construct_coset_stripe(in.order(), in.need_h(), o.d);
        }
        if (o.construct == "two_torsion_plus_halforbit") {
            return construct_two_torsion_plus_halforbit(
                Group::make(in.has_group() ? GroupSpec::parse(in.group) : GroupSpec::cyclic(in.order())));
        }
        if (o.construct == "even_elements") {
            return construct_even_elements(in.order(), in.need_h());
        }
        throw std::invalid_argument("unknown construction '" + o.construct +
                                    "' (coset_stripe, two_torsion_plus_halforbit, even_elements)");
    }();
    out << to_json_line(w) << '\n';
    return validate_witness(w) ? kOk : kFailure;
}

struct VerifyOpts {
    SweepPlan plan;
    std::string format = "csv";
    std::string out_path;
    CLI::Option* h_max_opt = nullptr;
    CLI::Option* h_min_opt = nullptr;
};

std::uint32_t default_threshold(const std::string& suite) {
    if (suite == "rho" || suite == "rho-hat3" || suite == "rho-hat-prime") {
        return 24;
    }
    if (suite == "sum-free") {
        return kMaxOracleOrder;
    }
    return 30;
}

void apply_suite_defaults(VerifyOpts& o) {
    SweepPlan& p = o.plan;
    if (o.h_min_opt->count() == 0) {
        p.h_min = p.suite == "vg" ? 2 : 1;
    }
    if (o.h_max_opt->count() == 0) {
        if (p.suite == "rho") {
            p.h_max = 4;
        } else if (p.suite == "chi") {
            p.h_max = 5;
        } else if (p.suite == "vg") {
            p.h_max = 10;
        } else {
            p.h_max = 1 << 20;  // every h that makes sense for the instance
        }
    }
}

int do_verify(VerifyOpts& o, const BudgetFlags& flags, std::ostream& out, std::ostream& err) {
    apply_suite_defaults(o);
    o.plan.budget = flags.resolve(default_threshold(o.plan.suite));
    const ReportFormat format = parse_report_format(o.format);
    Report report = run_suite(o.plan);

    std::ostream& summary = o.out_path.empty() ? err : out;
    if (o.out_path.empty()) {
        out << format_report(report, format, o.plan.deterministic);
    } else {
        emit_report(report, o.out_path, format, o.plan.deterministic);
    }
    summary << "suite " << report.suite << ": " << report.records.size() << " records, "
            << report.count(MatchStatus::agree) << " agree, " << report.count(MatchStatus::formula_bound_respected)
            << " bound-only, " << report.count(MatchStatus::oracle_incomplete) << " incomplete, "
            << report.count(MatchStatus::mismatch) << " mismatch\n";
    const ConjectureCounters& c = report.conjecture;
    if (c.proved_equal + c.bound_only + c.mismatch > 0) {
        summary << "conjectured equalities: " << c.proved_equal << " proved-equal, " << c.bound_only
                << " bound-only, " << c.mismatch << " mismatch\n";
    }
    for (const auto& [key, count] : report.coverage) {
        summary << "coverage " << key << ": " << count << '\n';
    }
    if (report.has_mismatch()) {
        summary << "MISMATCH: see the first rows of the report\n";
        return kFailure;
    }
    return kOk;
}

int do_groups(std::uint32_t n, bool as_json, std::ostream& out) {
    const std::vector<GroupSpec> groups = groups_of_order(n);
    if (as_json) {
        json j = json::array();
        for (const GroupSpec& g : groups) {
            j.push_back({{"group", g.to_string()}, {"invariant_factors", g.invariant_factors()}});
        }
        out << j.dump() << '\n';
        return kOk;
    }
    for (const GroupSpec& g : groups) {
        out << g.to_string() << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Critical numbers and minimum sumset sizes in finite abelian groups", "critnum"};
    app.require_subcommand(1);
    // -h is taken by the summand count.
    app.set_help_flag("--help", "Print this help message and exit");

    Instance compute_in;
    CLI::App* compute = app.add_subcommand("compute", "Evaluate a closed-form formula (never searches)");
    compute_in.attach(compute);

    Instance oracle_in;
    BudgetFlags oracle_budget;
    bool restricted = false;
    CLI::App* oracle = app.add_subcommand("oracle", "Run an exact search and print the value with a witness");
    oracle_in.attach(oracle);
    oracle->add_flag("--restricted", restricted, "For --quantity deficient: use distinct summands");
    oracle_budget.attach(oracle);

    Instance witness_in;
    WitnessOpts witness_opts;
    CLI::App* witness = app.add_subcommand("witness", "Construct a witness set or re-validate a witness file");
    witness_in.attach(witness, false);
    witness->add_option("--construct", witness_opts.construct,
                        "coset_stripe, two_torsion_plus_halforbit or even_elements");
    witness->add_option("--validate", witness_opts.validate, "JSON-lines witness file");
    witness->add_option("--d", witness_opts.d, "Modulus for coset_stripe (0: best divisor)");

    VerifyOpts verify_opts;
    BudgetFlags verify_budget;
    CLI::App* verify = app.add_subcommand("verify", "Sweep a range and cross-check formulas against the oracle");
    verify->add_option("--suite", verify_opts.plan.suite, "Suite to run")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--n-min", verify_opts.plan.n_min, "Smallest group order");
    verify->add_option("--n-max", verify_opts.plan.n_max, "Largest group order");
    verify_opts.h_min_opt = verify->add_option("--h-min", verify_opts.plan.h_min, "Smallest h");
    verify_opts.h_max_opt = verify->add_option("--h-max", verify_opts.plan.h_max, "Largest h");
    verify->add_flag("--cyclic-only", verify_opts.plan.cyclic_only, "Only cyclic groups");
    verify->add_option("--rho-hat-n-max", verify_opts.plan.rho_hat_n_max,
                       "h3-conjecture: largest n for the restricted sumset size part");
    verify->add_option("--format", verify_opts.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    verify->add_option("--out,-o", verify_opts.out_path, "Report path (default: standard output)");
    verify->add_option("--jobs,-j", verify_opts.plan.jobs, "Worker threads (0: all cores)");
    verify->add_flag("--deterministic", verify_opts.plan.deterministic, "Write zero timings");
    verify_budget.attach(verify);

    std::uint32_t groups_n = 0;
    bool groups_json = false;
    CLI::App* groups = app.add_subcommand("groups", "List the isomorphism types of order n");
    groups->add_option("--n,-n", groups_n, "Group order")->required()->check(CLI::Range(2u, 1u << 30));
    groups->add_flag("--json", groups_json, "Print a JSON array");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (compute->parsed()) {
            return do_compute(compute_in, out);
        }
        if (oracle->parsed()) {
            return do_oracle(oracle_in, oracle_budget, restricted, out);
        }
        if (witness->parsed()) {
            return do_witness(witness_opts, witness_in, out);
        }
        if (verify->parsed()) {
            return do_verify(verify_opts, verify_budget, out, err);
        }
        if (groups->parsed()) {
            return do_groups(groups_n, groups_json, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, out, err);
}

}  // namespace critnum::cli
