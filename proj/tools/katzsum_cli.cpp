// katzsum: batch verifier for Katz's identities and the Mellin-transform evaluations.
//
//   katzsum verify --q 13 --q 3^2 --a all --suite all --out report.json
//   katzsum table --q 5 --a 1 --object V
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage/config/io error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "katzsum/error.hpp"
#include "katzsum/harness.hpp"

namespace {

constexpr int kExitUsage = 2;

int run_verify(const std::vector<std::string>& q_specs, const std::string& a_spec,
               const std::vector<std::string>& suites, double tol, const std::string& out,
               const std::string& format) {
    using namespace katzsum;
    SuiteConfig config;
    for (const auto& s : q_specs) config.fields.push_back(parse_field_spec(s));
    config.a_policy = parse_a_policy(a_spec);
    config.suites = parse_suites(suites);
    config.tol = tol;
    config.out_path = out;
    config.format = format == "csv" ? ReportFormat::Csv : ReportFormat::Json;

    const RunResult result = run(config);

    std::size_t total = 0;
    std::size_t failed = 0;
    for (const auto& f : result.fields) {
        for (const auto& r : f.runs) {
            ++total;
            if (!r.pass) {
                ++failed;
                std::fprintf(stderr, "FAIL %s q=%u a=%s scaled_err=%.3e worst=%s\n", r.check_id.c_str(), r.q,
                             r.a ? std::to_string(*r.a).c_str() : "-", r.max_scaled_err, r.worst.label.c_str());
            }
        }
    }
    std::fprintf(stderr, "%zu checks, %zu failed\n", total, failed);

    if (out.empty()) {
        std::cout << (config.format == ReportFormat::Json ? report_json(result) : report_csv(result));
    } else {
        emit_report(result, config.format, out);
    }
    return result.exit_code();
}

int run_table(const std::string& q_spec, std::uint32_t a, const std::string& object, const std::string& out) {
    using namespace katzsum;
    const auto [p, n] = parse_field_spec(q_spec);
    const auto sums = build_sums(p, n);
    if (a == 0 || a >= sums->field().q()) {
        throw Error(Errc::ConfigError, "a must be a nonzero element index below q");
    }
    const std::string csv = table_csv(sums, a, object == "P");
    if (out.empty()) {
        std::cout << csv;
        return 0;
    }
    std::FILE* fp = std::fopen(out.c_str(), "wb");
    if (!fp) throw Error(Errc::IoError, "cannot open " + out);
    const bool ok = std::fwrite(csv.data(), 1, csv.size(), fp) == csv.size();
    std::fclose(fp);
    if (!ok) throw Error(Errc::IoError, "write failed for " + out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exhaustive verification of Katz's mixed character sum identities over F_q, q = 1 mod 4"};
    app.require_subcommand(1);

    std::vector<std::string> q_specs;
    std::string a_spec = "all";
    std::vector<std::string> suites{"all"};
    double tol = katzsum::kDefaultTol;
    std::string out;
    std::string format = "json";

    auto* verify = app.add_subcommand("verify", "run verification suites and write a report");
    verify->add_option("--q", q_specs, "field size as p^n or a prime power (repeatable)")->required();
    verify->add_option("--a", a_spec, "all | sample | comma-separated element indices");
    verify->add_option("--suite", suites, "main | mellin | transforms | classical | all (repeatable)");
    verify->add_option("--tol", tol, "relative-plus-absolute tolerance");
    verify->add_option("--out", out, "report path (stdout if omitted)");
    verify->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    std::string table_q;
    std::uint32_t table_a = 1;
    std::string object = "V";
    auto* table = app.add_subcommand("table", "print P or V as CSV");
    table->add_option("--q", table_q, "field size as p^n or a prime power")->required();
    table->add_option("--a", table_a, "parameter a (element index)")->required();
    table->add_option("--object", object, "P | V")->check(CLI::IsMember({"P", "V"}));
    table->add_option("--out", out, "CSV path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return run_verify(q_specs, a_spec, suites, tol, out, format);
        return run_table(table_q, table_a, object, out);
    } catch (const katzsum::Error& e) {
        std::fprintf(stderr, "katzsum: %s\n", e.what());
        return kExitUsage;
    }
}
