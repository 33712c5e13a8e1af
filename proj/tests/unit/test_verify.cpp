#include "critnum/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

using namespace critnum;

namespace {

SweepPlan plan_for(const std::string& suite, std::uint32_t n_min, std::uint32_t n_max, int h_min, int h_max) {
    SweepPlan p;
    p.suite = suite;
    p.n_min = n_min;
    p.n_max = n_max;
    p.h_min = h_min;
    p.h_max = h_max;
    p.deterministic = true;
    return p;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::size_t line_count(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

const VerificationRecord* find(const Report& r, const std::string& group, const std::string& quantity,
                               std::optional<std::int64_t> h, std::optional<std::int64_t> m = std::nullopt) {
    for (const auto& rec : r.records) {
        if (rec.group == group && rec.quantity == quantity && rec.h == h && (!m || rec.m == m)) {
            return &rec;
        }
    }
    return nullptr;
}

}  // namespace

TEST(Report, EmptyCsvIsHeaderOnly) {
    const Report r;
    EXPECT_EQ(format_report(r, ReportFormat::csv, true), std::string(kCsvHeader) + "\n");
    EXPECT_EQ(format_report(r, ReportFormat::jsonl, true), "");
}

TEST(Report, SingleAgreeRow) {
    Report r;
    VerificationRecord rec;
    rec.group = "Z10";
    rec.quantity = "chi";
    rec.h = 2;
    rec.formula_value = 6;
    rec.oracle_value = 6;
    rec.kind = "exact";
    rec.match = MatchStatus::agree;
    rec.elapsed_ms = 1.25;
    rec.nodes = 17;
    r.records.push_back(rec);
    EXPECT_EQ(format_report(r, ReportFormat::csv, false),
              std::string(kCsvHeader) + "\nZ10,chi,2,,,6,6,exact,agree,,1.250,17\n");
    EXPECT_EQ(format_report(r, ReportFormat::csv, true),
              std::string(kCsvHeader) + "\nZ10,chi,2,,,6,6,exact,agree,,0,17\n");
    const std::string j = format_report(r, ReportFormat::jsonl, true);
    EXPECT_EQ(line_count(j), 1u);
    EXPECT_NE(j.find("\"match\":\"agree\""), std::string::npos);
}

TEST(Report, FormatParsing) {
    EXPECT_EQ(parse_report_format("csv"), ReportFormat::csv);
    EXPECT_EQ(parse_report_format("jsonl"), ReportFormat::jsonl);
    EXPECT_THROW(parse_report_format("xml"), std::invalid_argument);
}

TEST(Report, MismatchesComeFirstInStableOrder) {
    std::vector<VerificationRecord> recs(5);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        recs[i].group = "Z" + std::to_string(i + 2);
        recs[i].match = (i % 2 == 1) ? MatchStatus::mismatch : MatchStatus::agree;
    }
    sort_records(recs);
    EXPECT_EQ(recs[0].group, "Z3");
    EXPECT_EQ(recs[1].group, "Z5");
    EXPECT_EQ(recs[2].group, "Z2");
    EXPECT_EQ(recs[3].group, "Z4");
    EXPECT_EQ(recs[4].group, "Z6");
}

TEST(SweepPlan, Validation) {
    EXPECT_NO_THROW(plan_for("chi", 2, 8, 1, 3).validate());
    EXPECT_THROW(plan_for("nope", 2, 8, 1, 3).validate(), std::invalid_argument);
    EXPECT_THROW(plan_for("chi", 9, 8, 1, 3).validate(), std::invalid_argument);
    EXPECT_THROW(plan_for("chi", 2, 8, 4, 3).validate(), std::invalid_argument);
    EXPECT_THROW(run_suite(plan_for("nope", 2, 8, 1, 3)), std::invalid_argument);
    const auto names = suite_names();
    for (const char* s : {"rho", "vg", "chi", "chi-hat", "h3-conjecture", "rho-hat3", "rho-hat-prime", "ggh",
                          "classical", "sum-free"}) {
        EXPECT_NE(std::find(names.begin(), names.end(), s), names.end()) << s;
    }
}

TEST(Suites, ChiSpotRows) {
    const Report r = run_suite(plan_for("chi", 10, 12, 2, 3));
    EXPECT_FALSE(r.has_mismatch());
    const auto* z10 = find(r, "Z10", "chi", 2);
    ASSERT_NE(z10, nullptr);
    EXPECT_EQ(z10->formula_value, 6);
    EXPECT_EQ(z10->oracle_value, 6);
    EXPECT_EQ(z10->kind, "exact");
    EXPECT_EQ(z10->match, MatchStatus::agree);
    const auto* z2z6 = find(r, "Z2xZ6", "chi", 3);
    ASSERT_NE(z2z6, nullptr);
    EXPECT_EQ(z2z6->oracle_value, 7);
}

TEST(Suites, RhoAndRhoHatPrimeAgree) {
    const Report rho = run_suite(plan_for("rho", 2, 9, 1, 3));
    EXPECT_FALSE(rho.has_mismatch());
    EXPECT_EQ(rho.count(MatchStatus::agree), rho.records.size());
    const Report prime = run_suite(plan_for("rho-hat-prime", 2, 13, 1, 1 << 20));
    EXPECT_FALSE(prime.has_mismatch());
    EXPECT_GT(prime.records.size(), 0u);
    EXPECT_EQ(prime.count(MatchStatus::agree), prime.records.size());
}

TEST(Suites, VgFlagsDivisibleG) {
    const Report r = run_suite(plan_for("vg", 16, 16, 5, 5));
    ASSERT_TRUE(r.has_mismatch());
    const VerificationRecord& first = r.records.front();
    EXPECT_EQ(first.match, MatchStatus::mismatch);
    EXPECT_EQ(first.g, 2);
    EXPECT_EQ(first.formula_value, 3);
    EXPECT_EQ(first.oracle_value, 4);
    const Report ok = run_suite(plan_for("vg", 1, 200, 2, 4));
    EXPECT_FALSE(ok.has_mismatch());
}

TEST(Suites, ChiHatAndConjecture) {
    const Report r = run_suite(plan_for("chi-hat", 2, 14, 1, 1 << 20));
    EXPECT_FALSE(r.has_mismatch());
    const auto* z12 = find(r, "Z12", "chi_hat", 5);
    ASSERT_NE(z12, nullptr);
    EXPECT_EQ(z12->formula_value, 8);
    EXPECT_EQ(z12->oracle_value, 8);

    SweepPlan p = plan_for("h3-conjecture", 11, 18, 3, 3);
    p.rho_hat_n_max = 14;
    const Report c = run_suite(p);
    EXPECT_FALSE(c.has_mismatch());
    EXPECT_GT(c.conjecture.proved_equal, 0u);
    EXPECT_EQ(c.conjecture.mismatch, 0u);
}

TEST(Suites, GghCoverage) {
    const Report r = run_suite(plan_for("ggh", 2, 8, 1, 1 << 20));
    EXPECT_FALSE(r.has_mismatch());
    EXPECT_GT(r.coverage.at("case_1"), 0u);
    EXPECT_GT(r.coverage.at("case_3"), 0u);
    EXPECT_THROW(run_suite(plan_for("ggh", 2, 21, 1, 1 << 20)), std::invalid_argument);
}

TEST(Suites, ClassicalAndSumFree) {
    const Report c = run_suite(plan_for("classical", 10, 13, 1, 1));
    EXPECT_FALSE(c.has_mismatch());
    EXPECT_EQ(c.count(MatchStatus::agree), c.records.size());
    const Report s = run_suite(plan_for("sum-free", 2, 20, 1, 1));
    EXPECT_FALSE(s.has_mismatch());
    EXPECT_EQ(s.records.size(), 38u);
}

TEST(Emit, DeterministicAndWitnessesRevalidate) {
    const auto dir = std::filesystem::temp_directory_path() / "critnum_verify_test";
    std::filesystem::create_directories(dir);
    const SweepPlan plan = plan_for("chi", 8, 10, 2, 3);
    std::string first;
    for (int run = 0; run < 2; ++run) {
        SweepPlan p = plan;
        p.jobs = run == 0 ? 1 : 3;
        Report r = run_suite(p);
        const auto path = dir / ("run" + std::to_string(run) + ".csv");
        emit_report(r, path, ReportFormat::csv, true);
        const std::string text = slurp(path);
        const std::string witnesses = slurp(path.string() + ".witnesses.jsonl");
        if (run == 0) {
            first = text + witnesses;
        } else {
            std::string normalized = text;
            for (std::size_t pos; (pos = normalized.find("run1.csv")) != std::string::npos;) {
                normalized.replace(pos, 8, "run0.csv");
            }
            EXPECT_EQ(normalized + witnesses, first);
        }
        const auto loaded = read_witness_file(path.string() + ".witnesses.jsonl");
        ASSERT_FALSE(loaded.empty());
        for (const auto& rec : r.records) {
            ASSERT_FALSE(rec.witness_ref.empty());
            const auto hash = rec.witness_ref.find('#');
            const std::size_t line = std::stoul(rec.witness_ref.substr(hash + 1));
            ASSERT_LE(line, loaded.size());
            EXPECT_EQ(check_witness(loaded[line - 1]), "") << rec.witness_ref;
        }
    }
    std::filesystem::remove_all(dir);
}
