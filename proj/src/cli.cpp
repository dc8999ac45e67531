#include "theta/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace theta::cli {

namespace {

std::string class_name(ClassSelection c) {
    switch (c) {
        case ClassSelection::zero: return "0";
        case ClassSelection::one: return "1";
        case ClassSelection::both: return "both";
    }
    return "?";
}

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::table: return "table";
    }
    return "?";
}

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

nlohmann::ordered_json config_json(const RunConfig& config) {
    nlohmann::ordered_json j;
    j["class"] = class_name(config.manifold_class);
    j["max_n"] = config.n_max;
    j["mode"] = std::string(to_string(config.mode));
    j["oracle_cap"] = config.oracle_cap;
    j["format"] = format_name(config.output_format);
    j["base_group"] = config.base_group_override ? nlohmann::ordered_json(*config.base_group_override)
                                                 : nlohmann::ordered_json(nullptr);
    j["seed"] = config.seed;
    return j;
}

Mode mode_from(const std::string& text) { return *parse_mode(text); }

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Theta-group Jordan-property verifier", "theta_jordan"};
    app.require_subcommand(1);

    RunConfig run_config;
    std::string class_text = "both";
    std::string mode_text = "both";
    std::string format_text = "table";
    std::string out_path;
    std::string base_group;
    bool no_timestamps = false;

    auto* verify = app.add_subcommand("verify", "Verify the abelian-index bound on the G_n family");
    verify->add_option("--class", class_text, "Manifold class: 0, 1 or both")
        ->check(CLI::IsMember({"0", "1", "both"}));
    verify->add_option("--max-n", run_config.n_max, "Largest level n")
        ->check(CLI::Range(std::int64_t{1}, kMaxLevel));
    verify->add_option("--mode", mode_text, "oracle, structural or both")
        ->check(CLI::IsMember({"oracle", "structural", "both"}));
    verify->add_option("--oracle-cap", run_config.oracle_cap, "Largest group order for the oracle")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{4096}));
    verify->add_option("--format", format_text, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    verify->add_option("--out", out_path, "Write the report to PATH instead of stdout");
    verify->add_option("--base-group", base_group, "Run on Heis(K) for K given as e.g. Z2xZ2");
    verify->add_option("--seed", run_config.seed, "Seed for randomized table checks");
    verify->add_flag("--no-timestamps", no_timestamps, "Omit timing and generation time");

    CertifyConfig cert_config;
    std::string cert_class = "1";
    std::string cert_mode = "both";
    auto* certify = app.add_subcommand("certify", "Refute a candidate Jordan constant c");
    certify->add_option("--class", cert_class, "Manifold class: 0 or 1")->check(CLI::IsMember({"0", "1"}));
    certify->add_option("--threshold", cert_config.threshold, "Candidate Jordan constant c")
        ->required()
        ->check(CLI::Range(std::int64_t{1}, kMaxLevel - 2));
    certify->add_option("--mode", cert_mode, "oracle, structural or both")
        ->check(CLI::IsMember({"oracle", "structural", "both"}));
    certify->add_option("--oracle-cap", cert_config.oracle_cap, "Largest group order for the oracle")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{4096}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (certify->parsed()) {
        cert_config.parity = cert_class == "0" ? 0 : 1;
        cert_config.mode = mode_from(cert_mode);
        return cert_config;
    }

    run_config.manifold_class = class_text == "0"   ? ClassSelection::zero
                                : class_text == "1" ? ClassSelection::one
                                                    : ClassSelection::both;
    run_config.mode = mode_from(mode_text);
    run_config.output_format = format_text == "json"  ? OutputFormat::json
                               : format_text == "csv" ? OutputFormat::csv
                                                      : OutputFormat::table;
    if (!out_path.empty()) run_config.output_path = out_path;
    if (!base_group.empty()) {
        try {
            parse_group_spec(base_group);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        run_config.base_group_override = base_group;
    }
    run_config.timestamps = !no_timestamps;
    return run_config;
}

RunResult run(const RunConfig& config) {
    LevelOptions options;
    options.mode = config.mode;
    options.oracle_cap = config.oracle_cap;
    options.seed = config.seed;
    options.corrupt_multiplication = config.inject_fault;

    RunResult result;
    ReportDocument& doc = result.document;
    doc.config = config_json(config);
    doc.timestamps = config.timestamps;
    if (config.timestamps) doc.generated_at = utc_now();

    if (config.base_group_override) {
        doc.reports.push_back(verify_base(parse_group_spec(*config.base_group_override), options));
    } else {
        if (config.manifold_class != ClassSelection::one) {
            doc.reports.push_back(verify_class(DiffeoClass{0}, config.n_max, options));
        }
        if (config.manifold_class != ClassSelection::zero) {
            doc.reports.push_back(verify_class(DiffeoClass{1}, config.n_max, options));
        }
    }

    for (const auto& report : doc.reports) {
        const auto found = find_violations(report);
        doc.violations.insert(doc.violations.end(), found.begin(), found.end());
    }
    doc.ok = doc.violations.empty();
    result.exit_code = doc.ok ? kSuccess : kViolation;

    switch (config.output_format) {
        case OutputFormat::json: result.rendered = render_json(doc); break;
        case OutputFormat::csv: result.rendered = render_csv(doc); break;
        case OutputFormat::table: result.rendered = render_table(doc); break;
    }
    return result;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    RunResult result;
    try {
        result = run(config);
    } catch (const std::exception& e) {
        err << "theta_jordan: " << e.what() << "\n";
        return kViolation;
    }

    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "theta_jordan: cannot open " << *config.output_path << " for writing\n";
            return kIoError;
        }
        file << result.rendered;
        file.flush();
        if (!file) {
            err << "theta_jordan: write to " << *config.output_path << " failed\n";
            return kIoError;
        }
    } else {
        out << result.rendered;
        out.flush();
        if (!out) return kIoError;
    }

    for (const auto& v : result.document.violations) err << "theta_jordan: violation: " << v << "\n";
    return result.exit_code;
}

int execute(const CertifyConfig& config, std::ostream& out, std::ostream& err) {
    LevelOptions options;
    options.mode = config.mode;
    options.oracle_cap = config.oracle_cap;
    const DiffeoClass manifold_class{config.parity};
    try {
        const Certificate cert = jordan_certificate(manifold_class, config.threshold, options);
        out << to_json(cert, manifold_class).dump(2) << "\n";
        if (cert.min_abelian_index <= config.threshold) {
            err << "theta_jordan: certificate does not exceed the threshold\n";
            return kViolation;
        }
    } catch (const std::logic_error& e) {
        err << "theta_jordan: " << e.what() << "\n";
        return kViolation;
    }
    return out ? kSuccess : kIoError;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               bool inject_fault) {
    Command command;
    try {
        command = parse_args(args);
    } catch (const HelpRequested& help) {
        out << help.what();
        return kSuccess;
    } catch (const UsageError& e) {
        err << "theta_jordan: " << e.what() << "\n";
        return kUsage;
    }

    if (auto* config = std::get_if<RunConfig>(&command)) {
        config->inject_fault = inject_fault;
        return execute(*config, out, err);
    }
    return execute(std::get<CertifyConfig>(command), out, err);
}

}  // namespace theta::cli
