#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "theta/bundlemodel.hpp"
#include "theta/report.hpp"

namespace theta::cli {

enum ExitCode : int { kSuccess = 0, kViolation = 1, kUsage = 2, kIoError = 3 };

/// Largest level accepted on the command line; keeps n^3 inside int64.
inline constexpr std::int64_t kMaxLevel = 2'000'000;

enum class ClassSelection { zero, one, both };
enum class OutputFormat { json, csv, table };

struct RunConfig {
    ClassSelection manifold_class = ClassSelection::both;
    std::int64_t n_max = 6;
    Mode mode = Mode::both;
    std::int64_t oracle_cap = kDefaultOracleCap;
    OutputFormat output_format = OutputFormat::table;
    std::optional<std::string> output_path;
    std::optional<std::string> base_group_override;
    std::uint64_t seed = 0;
    bool timestamps = true;
    /// Test hook; set from the THETA_JORDAN_INJECT_FAULT environment variable.
    bool inject_fault = false;
};

struct CertifyConfig {
    int parity = 1;
    std::int64_t threshold = 1;
    Mode mode = Mode::both;
    std::int64_t oracle_cap = kDefaultOracleCap;
};

using Command = std::variant<RunConfig, CertifyConfig>;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help was requested; what() holds the help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments without the program name, e.g. {"verify", "--max-n", "6"}.
Command parse_args(const std::vector<std::string>& args);

struct RunResult {
    int exit_code = kSuccess;
    ReportDocument document;
    std::string rendered;
};

/// Computes the reports and renders them. Does not write anything.
RunResult run(const RunConfig& config);

/// Full verify pipeline: run, then write to config.output_path or `out`.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);
int execute(const CertifyConfig& config, std::ostream& out, std::ostream& err);

/// argv-style entry point used by the binary.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               bool inject_fault = false);

}  // namespace theta::cli
