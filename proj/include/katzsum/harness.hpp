#pragma once

// Verification suites over a list of fields and parameters a, and the report
// files they produce.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "katzsum/sums.hpp"

namespace katzsum {

enum class Suite { Main, Mellin, Transforms, Classical };
enum class ReportFormat { Json, Csv };

struct APolicy {
    enum class Kind { All, Sample, Explicit };
    Kind kind = Kind::All;
    std::vector<std::uint32_t> explicit_values;  // element indices, Kind::Explicit only
};

struct SuiteConfig {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> fields;  // (p, n)
    APolicy a_policy;
    std::vector<Suite> suites{Suite::Main, Suite::Mellin, Suite::Transforms, Suite::Classical};
    double tol = kDefaultTol;
    std::string out_path;
    ReportFormat format = ReportFormat::Json;
};

struct WorstInstance {
    std::string label;
    Complex lhs;
    Complex rhs;
};

struct CheckReport {
    std::string check_id;
    std::uint32_t q = 0;
    std::optional<std::uint32_t> a;  // nullopt for checks that do not depend on a
    std::uint64_t instances = 0;
    double max_abs_err = 0.0;
    /// max |lhs - rhs| / (1 + max(|lhs|, |rhs|)); pass iff this is <= tol.
    double max_scaled_err = 0.0;
    double tol = kDefaultTol;
    bool pass = true;
    WorstInstance worst;
};

/// Folds instances of one identity into a CheckReport.
class CheckAccumulator {
public:
    CheckAccumulator(std::string check_id, std::uint32_t q, std::optional<std::uint32_t> a, double tol);

    template <typename LabelFn>
    void add(Complex lhs, Complex rhs, LabelFn&& label) {
        const double abs_err = std::abs(lhs - rhs);
        const double scaled = scaled_error(lhs, rhs);
        ++report_.instances;
        report_.max_abs_err = std::max(report_.max_abs_err, abs_err);
        if (report_.instances == 1 || scaled > report_.max_scaled_err) {
            report_.max_scaled_err = scaled;
            report_.worst = {label(), lhs, rhs};
        }
    }

    CheckReport finish() &&;

private:
    CheckReport report_;
};

struct FieldRun {
    FieldParams params;
    std::uint32_t generator = 0;
    std::vector<CheckReport> runs;
};

struct RunResult {
    std::vector<FieldRun> fields;
    bool all_pass() const;
    /// 0 if every check passed, 1 otherwise.
    int exit_code() const { return all_pass() ? 0 : 1; }
};

/// Parses "p^n" or a plain prime power. Throws Error{ConfigError} naming the problem.
std::pair<std::uint32_t, std::uint32_t> parse_field_spec(const std::string& text);

/// Parses "all", "sample" or a comma-separated list of element indices.
APolicy parse_a_policy(const std::string& text);

/// Parses main | mellin | transforms | classical | all.
std::vector<Suite> parse_suites(const std::vector<std::string>& names);

const char* suite_name(Suite s);

/// Validates every (p, n) and a value; throws Error{ConfigError}.
void validate(const SuiteConfig& config);

/// Element indices of a selected by the policy for field f.
std::vector<std::uint32_t> select_a(const FiniteField& f, const APolicy& policy);

/// The a-values used by the all-pairs sweeps: the policy itself for q <= 29,
/// and {1, g, g^2, -1} (restricted to the policy's explicit list if any) above.
std::vector<std::uint32_t> select_a_for_pairs(const FiniteField& f, const APolicy& policy);

inline constexpr std::uint32_t kPairSweepFullLimit = 29;

/// Runs every selected suite on one field.
FieldRun run_field(const SumsPtr& sums, const SuiteConfig& config);

/// Runs the configured suites on every field in order; validates first.
RunResult run(const SuiteConfig& config);

/// Writes the report atomically (temp file + rename). Throws Error{IoError}.
void emit_report(const RunResult& result, ReportFormat format, const std::string& path);

std::string report_json(const RunResult& result);
std::string report_csv(const RunResult& result);

/// CSV of P (j,k,re,im) or V (j,re,im) for one (field, a).
std::string table_csv(const SumsPtr& sums, std::uint32_t a, bool p_table);

}  // namespace katzsum
