#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "katzsum/error.hpp"
#include "katzsum/harness.hpp"

using namespace katzsum;
using nlohmann::json;

namespace {

Errc config_error_of(const std::string& text) {
    try {
        parse_field_spec(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected '" << text << "' to be rejected";
    return Errc::IoError;
}

SuiteConfig config_for(std::uint32_t p, std::uint32_t n, std::vector<Suite> suites) {
    SuiteConfig c;
    c.fields = {{p, n}};
    c.suites = std::move(suites);
    return c;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "katzsum_harness_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(FieldSpec, AcceptsPowerAndPlainForms) {
    EXPECT_EQ(parse_field_spec("3^2"), (std::pair<std::uint32_t, std::uint32_t>{3, 2}));
    EXPECT_EQ(parse_field_spec("9"), (std::pair<std::uint32_t, std::uint32_t>{3, 2}));
    EXPECT_EQ(parse_field_spec("49"), (std::pair<std::uint32_t, std::uint32_t>{7, 2}));
    EXPECT_EQ(parse_field_spec("13"), (std::pair<std::uint32_t, std::uint32_t>{13, 1}));
}

TEST(FieldSpec, RejectsBadFields) {
    EXPECT_EQ(config_error_of("15"), Errc::ConfigError);
    EXPECT_EQ(config_error_of("3"), Errc::ConfigError);
    EXPECT_EQ(config_error_of("27"), Errc::ConfigError);
    EXPECT_EQ(config_error_of("9^2"), Errc::ConfigError);
    EXPECT_EQ(config_error_of("x"), Errc::ConfigError);
    EXPECT_EQ(config_error_of(""), Errc::ConfigError);
    EXPECT_EQ(config_error_of("2^2"), Errc::ConfigError);
}

TEST(APolicy, ParsingAndSelection) {
    const auto f = FiniteField::build(13, 1);
    EXPECT_EQ(select_a(*f, parse_a_policy("all")).size(), 12u);

    // 1, g, g^2, -1 with g = 2.
    EXPECT_EQ(select_a(*f, parse_a_policy("sample")), (std::vector<std::uint32_t>{1, 2, 4, 12}));

    const APolicy ex = parse_a_policy("3,5");
    EXPECT_EQ(ex.kind, APolicy::Kind::Explicit);
    EXPECT_EQ(select_a(*f, ex), (std::vector<std::uint32_t>{3, 5}));
    EXPECT_THROW(parse_a_policy("3,,x"), Error);

    // Sample deduplicates when g^2 = -1 (q = 5).
    const auto f5 = FiniteField::build(5, 1);
    EXPECT_EQ(select_a(*f5, parse_a_policy("sample")), (std::vector<std::uint32_t>{1, 2, 4}));
}

TEST(APolicy, PairSweepCapsLargeFields) {
    const auto small = FiniteField::build(29, 1);
    const auto large = FiniteField::build(37, 1);
    EXPECT_EQ(select_a_for_pairs(*small, APolicy{}).size(), 28u);
    EXPECT_EQ(select_a_for_pairs(*large, APolicy{}).size(), 4u);
    APolicy ex;
    ex.kind = APolicy::Kind::Explicit;
    ex.explicit_values = {7, 8, 9, 10, 11};
    EXPECT_EQ(select_a_for_pairs(*large, ex).size(), 5u);
}

TEST(Validate, RejectsBadConfigs) {
    SuiteConfig c = config_for(13, 1, {Suite::Classical});
    EXPECT_NO_THROW(validate(c));
    c.tol = 0.0;
    EXPECT_THROW(validate(c), Error);
    c = config_for(13, 1, {});
    EXPECT_THROW(validate(c), Error);
    c = config_for(13, 1, {Suite::Main});
    c.a_policy = parse_a_policy("0");
    EXPECT_THROW(validate(c), Error);
    c.a_policy = parse_a_policy("13");
    EXPECT_THROW(validate(c), Error);
    EXPECT_THROW(parse_suites({"bogus"}), Error);
    EXPECT_EQ(parse_suites({"all"}).size(), 4u);
    EXPECT_STREQ(suite_name(Suite::Mellin), "mellin");
}

TEST(Accumulator, PassIffScaledErrorWithinTol) {
    CheckAccumulator ok("x", 13, std::nullopt, 1e-8);
    ok.add(Complex(2.0, 0.0), Complex(2.0 + 1e-9, 0.0), [] { return std::string("one"); });
    const CheckReport r = std::move(ok).finish();
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.instances, 1u);

    CheckAccumulator bad("y", 13, 3u, 1e-8);
    bad.add(Complex(1.0, 0.0), Complex(1.0, 0.0), [] { return std::string("fine"); });
    bad.add(Complex(1.0, 0.0), Complex(1.1, 0.0), [] { return std::string("off"); });
    const CheckReport b = std::move(bad).finish();
    EXPECT_FALSE(b.pass);
    EXPECT_EQ(b.worst.label, "off");
    EXPECT_NEAR(b.max_abs_err, 0.1, 1e-12);
}

TEST(Run, ThirteenAllSuitesPasses) {
    SuiteConfig c;
    c.fields = {{13, 1}};
    const RunResult r = run(c);
    ASSERT_EQ(r.fields.size(), 1u);
    EXPECT_TRUE(r.all_pass());
    EXPECT_EQ(r.exit_code(), 0);
    for (const auto& rep : r.fields[0].runs) {
        EXPECT_TRUE(rep.pass) << rep.check_id;
        EXPECT_GT(rep.instances, 0u) << rep.check_id;
        EXPECT_LT(rep.max_scaled_err, 1e-10) << rep.check_id;
    }
}

TEST(Run, FailingToleranceGivesExitOne) {
    SuiteConfig c = config_for(13, 1, {Suite::Classical});
    c.tol = 1e-300;
    const RunResult r = run(c);
    EXPECT_FALSE(r.all_pass());
    EXPECT_EQ(r.exit_code(), 1);
}

TEST(Run, MainSuiteRunsWithoutMellin) {
    const RunResult r = run(config_for(3, 2, {Suite::Main}));
    bool saw_main = false;
    for (const auto& rep : r.fields[0].runs) {
        EXPECT_EQ(rep.check_id.rfind("mellin", 0), std::string::npos);
        saw_main = saw_main || rep.check_id == "main_identity";
    }
    EXPECT_TRUE(saw_main);
}

TEST(Report, JsonShape) {
    const RunResult r = run(config_for(5, 1, {Suite::Classical, Suite::Main}));
    const json j = json::parse(report_json(r));
    EXPECT_EQ(j["field"]["p"], 5);
    EXPECT_EQ(j["field"]["n"], 1);
    EXPECT_EQ(j["field"]["q"], 5);
    EXPECT_EQ(j["field"]["generator"], 2);
    EXPECT_EQ(j["field"]["modulus"], json::array({0, 1}));
    ASSERT_EQ(j["runs"].size(), r.fields[0].runs.size());
    for (std::size_t i = 0; i < j["runs"].size(); ++i) {
        const auto& run_j = j["runs"][i];
        EXPECT_EQ(run_j["check_id"], r.fields[0].runs[i].check_id);  // execution order
        EXPECT_TRUE(run_j["pass"].get<bool>());
        EXPECT_TRUE(run_j.contains("max_abs_err"));
        EXPECT_TRUE(run_j.contains("tol"));
        EXPECT_TRUE(run_j.contains("instances"));
    }
}

TEST(Report, MultipleFieldsAndEmpty) {
    SuiteConfig c;
    c.fields = {{5, 1}, {3, 2}};
    c.suites = {Suite::Classical};
    const json j = json::parse(report_json(run(c)));
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j[1]["field"]["q"], 9);

    const json empty = json::parse(report_json(RunResult{}));
    EXPECT_TRUE(empty.is_array());
    EXPECT_TRUE(empty.empty());
    EXPECT_EQ(count_lines(report_csv(RunResult{})), 1u);  // header only
}

TEST(Report, CsvRowsAndPrecision) {
    const RunResult r = run(config_for(13, 1, {Suite::Transforms}));
    const std::string csv = report_csv(r);
    EXPECT_EQ(count_lines(csv), r.fields[0].runs.size() + 1);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "check_id,p,n,q,a,instances,worst_instance,lhs_re,lhs_im,rhs_re,rhs_im,max_abs_err,max_scaled_err,tol,pass");
    // Gauss sums of modulus sqrt(13) print with 17 significant digits.
    EXPECT_NE(csv.find("e-"), std::string::npos);
}

TEST(Report, Deterministic) {
    const auto c = config_for(17, 1, {Suite::Main, Suite::Mellin});
    EXPECT_EQ(report_json(run(c)), report_json(run(c)));
}

TEST(Report, EmitWritesAtomically) {
    const auto path = scratch("out.json");
    std::filesystem::remove(path);
    const RunResult r = run(config_for(5, 1, {Suite::Classical}));
    emit_report(r, ReportFormat::Json, path.string());
    EXPECT_EQ(slurp(path), report_json(r));
    EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));

    emit_report(r, ReportFormat::Csv, path.string());
    EXPECT_EQ(slurp(path), report_csv(r));

    try {
        emit_report(r, ReportFormat::Json, "/nonexistent-dir/x/out.json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::IoError);
    }
}

TEST(Table, RowCounts) {
    const auto s = build_sums(5, 1);
    const std::string v = table_csv(s, 1, false);
    EXPECT_EQ(v.substr(0, v.find('\n')), "j,re,im");
    EXPECT_EQ(count_lines(v), 6u);
    const std::string p = table_csv(s, 1, true);
    EXPECT_EQ(p.substr(0, p.find('\n')), "j,k,re,im");
    EXPECT_EQ(count_lines(p), 26u);
}

#ifdef KATZSUM_CLI_PATH
namespace {

int cli(const std::string& args) {
    const std::string cmd = std::string(KATZSUM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli("verify --q 13"), 0);
    EXPECT_EQ(cli("verify --q 15"), 2);
    EXPECT_EQ(cli("verify --q 3^2 --suite classical --tol 1e-300"), 1);
    EXPECT_EQ(cli("verify --q 13 --suite nope"), 2);
    EXPECT_EQ(cli("verify"), 2);
}

TEST(Cli, TableAndVerifyOutput) {
    const auto table = scratch("v.csv");
    ASSERT_EQ(cli("table --q 5 --a 1 --object V --out " + table.string()), 0);
    EXPECT_EQ(count_lines(slurp(table)), 6u);

    const auto report = scratch("r.csv");
    ASSERT_EQ(cli("verify --q 5 --suite classical --format csv --out " + report.string()), 0);
    EXPECT_EQ(slurp(report).rfind("check_id,", 0), 0u);
}
#endif
