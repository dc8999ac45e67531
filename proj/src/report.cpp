#include "theta/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace theta {

namespace {

using nlohmann::ordered_json;

std::string format_ms(double ms) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << ms;
    return os.str();
}

std::string optional_int(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : "";
}

}  // namespace

ordered_json to_json(const ReportEntry& entry) {
    ordered_json j;
    j["n"] = entry.n;
    j["base_group"] = entry.base_group;
    j["group_order"] = entry.group_order;
    j["max_abelian_order"] = entry.max_abelian_order;
    j["min_abelian_index"] = entry.min_abelian_index;
    j["method"] = std::string(to_string(entry.evidence.method));
    j["oracle_min_abelian_index"] =
        entry.evidence.oracle_index ? ordered_json(*entry.evidence.oracle_index) : ordered_json(nullptr);
    j["structural_min_abelian_index"] = entry.evidence.structural_index;
    return j;
}

ordered_json to_json(const VerificationReport& report) {
    ordered_json j;
    j["manifold_class"] = {{"parity", report.manifold_class.parity},
                           {"manifold", std::string(report.manifold_class.manifold())}};
    j["entries"] = ordered_json::array();
    for (const auto& e : report.entries) j["entries"].push_back(to_json(e));
    j["threshold_certificates"] = ordered_json::array();
    for (const auto& c : report.threshold_certificates) {
        j["threshold_certificates"].push_back({{"c", c.threshold}, {"n", c.n}});
    }
    return j;
}

ordered_json to_json(const ReportDocument& document) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["config"] = document.config;
    j["model"] = {
        {"torsion_group", "H(xi_n) = Z_n + Z_n, |H(xi_n)| = n^2"},
        {"torsion_order_equality", "model property; in general only |H(xi_n)| >= n^2"},
    };
    j["reports"] = ordered_json::array();
    for (const auto& r : document.reports) j["reports"].push_back(to_json(r));
    j["ok"] = document.ok;
    j["violations"] = document.violations;
    if (document.timestamps) {
        ordered_json elapsed = ordered_json::array();
        for (const auto& r : document.reports) {
            for (const auto& e : r.entries) {
                elapsed.push_back({{"class", r.manifold_class.parity},
                                   {"n", e.n},
                                   {"elapsed_ms", e.elapsed_ms}});
            }
        }
        j["timestamps"] = {{"generated_at", document.generated_at}, {"elapsed", std::move(elapsed)}};
    }
    return j;
}

std::string render_json(const ReportDocument& document) { return to_json(document).dump(2) + "\n"; }

std::string render_csv(const ReportDocument& document) {
    std::ostringstream os;
    os << "class,n,base_group,group_order,max_abelian_order,min_abelian_index,method,"
          "oracle_min_abelian_index,structural_min_abelian_index";
    if (document.timestamps) os << ",elapsed_ms";
    os << "\n";
    for (const auto& r : document.reports) {
        for (const auto& e : r.entries) {
            os << r.manifold_class.parity << ',' << e.n << ',' << e.base_group << ',' << e.group_order
               << ',' << e.max_abelian_order << ',' << e.min_abelian_index << ','
               << to_string(e.evidence.method) << ',' << optional_int(e.evidence.oracle_index) << ','
               << e.evidence.structural_index;
            if (document.timestamps) os << ',' << format_ms(e.elapsed_ms);
            os << "\n";
        }
    }
    return os.str();
}

std::string render_table(const ReportDocument& document) {
    std::vector<std::string> header{"class", "n", "K", "|G_n|", "max abelian", "min index", "method",
                                    "oracle", "structural"};
    if (document.timestamps) header.push_back("ms");

    std::vector<std::vector<std::string>> rows;
    for (const auto& r : document.reports) {
        for (const auto& e : r.entries) {
            std::vector<std::string> row{std::to_string(r.manifold_class.parity),
                                         std::to_string(e.n),
                                         e.base_group,
                                         std::to_string(e.group_order),
                                         std::to_string(e.max_abelian_order),
                                         std::to_string(e.min_abelian_index),
                                         std::string(to_string(e.evidence.method)),
                                         e.evidence.oracle_index ? std::to_string(*e.evidence.oracle_index) : "-",
                                         std::to_string(e.evidence.structural_index)};
            if (document.timestamps) row.push_back(format_ms(e.elapsed_ms));
            rows.push_back(std::move(row));
        }
    }

    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }

    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) os << "  ";
            // text columns left, numbers right
            const bool left = c == 2 || c == 6;
            os << (left ? std::left : std::right) << std::setw(static_cast<int>(width[c])) << cells[c];
        }
        os << "\n";
    };
    emit(header);
    std::size_t total = 0;
    for (const auto w : width) total += w;
    os << std::string(total + 2 * (width.size() - 1), '-') << "\n";
    for (const auto& row : rows) emit(row);

    for (const auto& r : document.reports) {
        if (r.threshold_certificates.empty()) continue;
        os << "\nclass " << r.manifold_class.parity << " (" << r.manifold_class.manifold()
           << ") certificates:";
        for (const auto& c : r.threshold_certificates) os << " c=" << c.threshold << "->n=" << c.n;
        os << "\n";
    }
    os << "\n" << (document.ok ? "OK" : "VIOLATION") << "\n";
    for (const auto& v : document.violations) os << "  " << v << "\n";
    return os.str();
}

ordered_json to_json(const Certificate& certificate, DiffeoClass manifold_class) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["manifold_class"] = {{"parity", manifold_class.parity},
                           {"manifold", std::string(manifold_class.manifold())}};
    j["threshold"] = certificate.threshold;
    j["n"] = certificate.n;
    j["min_abelian_index"] = certificate.min_abelian_index;
    j["method"] = std::string(to_string(certificate.evidence.method));
    j["oracle_min_abelian_index"] = certificate.evidence.oracle_index
                                        ? ordered_json(*certificate.evidence.oracle_index)
                                        : ordered_json(nullptr);
    j["structural_min_abelian_index"] = certificate.evidence.structural_index;
    return j;
}

}  // namespace theta
