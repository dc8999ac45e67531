#pragma once

// Serialisation of verification reports: versioned JSON, CSV and an
// aligned text table. Timing data only appears when timestamps are enabled,
// so timestamp-free output is a pure function of the inputs.

#include <string>
#include <vector>

#include <json.hpp>

#include "theta/bundlemodel.hpp"

namespace theta {

inline constexpr const char* kReportSchema = "theta-jordan/1";

struct ReportDocument {
    /// Echo of the run configuration, emitted verbatim under "config".
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::vector<VerificationReport> reports;
    bool ok = true;
    std::vector<std::string> violations;
    bool timestamps = true;
    /// ISO-8601 UTC; only used when timestamps is set.
    std::string generated_at;
};

nlohmann::ordered_json to_json(const ReportEntry& entry);
nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(const ReportDocument& document);

std::string render_json(const ReportDocument& document);
std::string render_csv(const ReportDocument& document);
std::string render_table(const ReportDocument& document);

nlohmann::ordered_json to_json(const Certificate& certificate, DiffeoClass manifold_class);

}  // namespace theta
