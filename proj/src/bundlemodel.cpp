#include "theta/bundlemodel.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "theta/symplectic.hpp"

namespace theta {

namespace {

void require_positive(std::int64_t value, const char* what) {
    if (value < 1) throw std::invalid_argument(std::string(what) + " must be >= 1, got " + std::to_string(value));
}

bool oracle_allowed(const ThetaGroup& group, const LevelOptions& options) {
    return options.mode != Mode::structural && group.order() <= options.oracle_cap;
}

// Same element numbering as from_theta, with the cocycle <l', k> dropped.
ConcreteGroup corrupted_concrete(const ThetaGroup& group, const LevelOptions& options) {
    group.require_enumerable(options.oracle_cap);
    const FiniteAbelianGroup& base = group.base();
    const std::int64_t m = group.central_order();
    return ConcreteGroup::from_function(
        static_cast<std::size_t>(group.order()),
        [&](ElementIndex a, ElementIndex b) {
            const ThetaElement g = group.element_at(a);
            const ThetaElement h = group.element_at(b);
            const ThetaElement gh{RootExp{(g.a.exponent + h.a.exponent) % m}, add(base, g.k, h.k),
                                  add(base, g.l, h.l)};
            return static_cast<ElementIndex>(group.index_of(gh));
        },
        options.seed);
}

}  // namespace

std::string_view DiffeoClass::manifold() const noexcept {
    return parity == 0 ? "T2xS2" : "nontrivial orientable S2-bundle over T2";
}

std::string_view to_string(Mode mode) noexcept {
    switch (mode) {
        case Mode::oracle: return "oracle";
        case Mode::structural: return "structural";
        case Mode::both: return "both";
    }
    return "?";
}

std::string_view to_string(Method method) noexcept {
    switch (method) {
        case Method::oracle: return "oracle";
        case Method::structural: return "structural";
        case Method::both: return "both";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string_view text) noexcept {
    if (text == "oracle") return Mode::oracle;
    if (text == "structural") return Mode::structural;
    if (text == "both") return Mode::both;
    return std::nullopt;
}

FiniteAbelianGroup torsion_group(std::int64_t k) {
    require_positive(k, "torsion level");
    return FiniteAbelianGroup::make({k, k});
}

AbElement embed_torsion(std::int64_t d, std::int64_t k, const AbElement& x) {
    require_positive(d, "torsion level");
    require_positive(k, "torsion level");
    if (k % d != 0) {
        throw std::invalid_argument(std::to_string(d) + "-torsion does not embed in " +
                                    std::to_string(k) + "-torsion");
    }
    const FiniteAbelianGroup small = torsion_group(d);
    if (!is_element_of(small, x.coords)) throw ShapeMismatch("point is not in the smaller torsion group");
    const FiniteAbelianGroup large = torsion_group(k);
    AbElement out{std::vector<std::int64_t>(large.rank(), 0)};
    // both groups are Z_j + Z_j, or trivial when j = 1
    for (std::size_t i = 0; i < x.coords.size(); ++i) out.coords[i] = x.coords[i] * (k / d);
    return out;
}

LevelData level_data(std::int64_t n) {
    require_positive(n, "level n");
    FiniteAbelianGroup K = FiniteAbelianGroup::make({n});
    ThetaGroup theta(K);
    return LevelData{n, n * n, std::move(K), std::move(theta)};
}

LevelData level_data_for_base(const FiniteAbelianGroup& base) {
    const std::int64_t n = base.order();
    return LevelData{n, n * n, base, ThetaGroup(base)};
}

DiffeoClass diffeo_class(std::int64_t chern_number) {
    if (chern_number < 0) {
        throw std::invalid_argument("negative Chern numbers are outside the model family");
    }
    return DiffeoClass{static_cast<int>(chern_number % 2)};
}

std::vector<LevelData> family_for_class(DiffeoClass manifold_class, std::int64_t n_max) {
    require_positive(n_max, "n_max");
    std::vector<LevelData> levels;
    const std::int64_t first = manifold_class.parity == 1 ? 1 : 2;
    for (std::int64_t n = first; n <= n_max; n += 2) levels.push_back(level_data(n));
    return levels;
}

Evidence abelian_index_evidence(const ThetaGroup& group, const LevelOptions& options) {
    Evidence evidence;
    evidence.structural_index = structural_min_abelian_index(group.base());
    if (!oracle_allowed(group, options)) return evidence;

    const ConcreteGroup concrete = options.corrupt_multiplication
                                       ? corrupted_concrete(group, options)
                                       : ConcreteGroup::from_theta(group, options.oracle_cap, options.seed);
    evidence.oracle_index = min_abelian_index(concrete, options.oracle_cap);
    evidence.method = options.mode == Mode::both ? Method::both : Method::oracle;
    return evidence;
}

Certificate jordan_certificate(DiffeoClass manifold_class, std::int64_t threshold,
                               const LevelOptions& options) {
    require_positive(threshold, "Jordan threshold");
    std::int64_t n = threshold + 1;
    if (n % 2 != manifold_class.parity) ++n;

    const LevelData level = level_data(n);
    Certificate cert;
    cert.threshold = threshold;
    cert.n = n;
    cert.evidence = abelian_index_evidence(level.theta, options);
    if (cert.evidence.method == Method::both &&
        *cert.evidence.oracle_index != cert.evidence.structural_index) {
        throw std::logic_error("oracle index " + std::to_string(*cert.evidence.oracle_index) +
                               " disagrees with structural index " +
                               std::to_string(cert.evidence.structural_index) + " at n = " +
                               std::to_string(n));
    }
    cert.min_abelian_index = cert.evidence.oracle_index.value_or(cert.evidence.structural_index);
    return cert;
}

ReportEntry verify_level(const LevelData& level, const LevelOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    ReportEntry entry;
    entry.n = level.n;
    entry.base_group = format_group_spec(level.K);
    entry.group_order = level.theta.order();
    entry.evidence = abelian_index_evidence(level.theta, options);
    entry.min_abelian_index = entry.evidence.oracle_index.value_or(entry.evidence.structural_index);
    entry.max_abelian_order = entry.group_order / entry.min_abelian_index;
    entry.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return entry;
}

namespace {

std::vector<ThresholdCertificate> threshold_certificates(const std::vector<ReportEntry>& entries) {
    std::vector<ThresholdCertificate> out;
    std::int64_t largest = 0;
    for (const auto& e : entries) largest = std::max(largest, e.min_abelian_index);
    // 1, 2, 5, 10, 20, 50, ...
    for (std::int64_t decade = 1; decade < largest; decade *= 10) {
        for (const std::int64_t step : {1, 2, 5}) {
            const std::int64_t c = decade * step;
            if (c >= largest) break;
            for (const auto& e : entries) {
                if (e.min_abelian_index > c) {
                    out.push_back({c, e.n});
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace

VerificationReport verify_class(DiffeoClass manifold_class, std::int64_t n_max,
                                const LevelOptions& options) {
    require_positive(n_max, "n_max");
    VerificationReport report;
    report.manifold_class = manifold_class;
    const std::int64_t first = manifold_class.parity == 1 ? 1 : 2;
    for (std::int64_t n = first; n <= n_max; n += 2) {
        report.entries.push_back(verify_level(level_data(n), options));
    }
    report.threshold_certificates = threshold_certificates(report.entries);
    return report;
}

VerificationReport verify_base(const FiniteAbelianGroup& base, const LevelOptions& options) {
    const LevelData level = level_data_for_base(base);
    VerificationReport report;
    report.manifold_class = diffeo_class(level.n);
    report.entries.push_back(verify_level(level, options));
    report.threshold_certificates = threshold_certificates(report.entries);
    return report;
}

std::vector<std::string> find_violations(const VerificationReport& report) {
    std::vector<std::string> out;
    std::int64_t previous = 0;
    for (const auto& e : report.entries) {
        const std::string where = "n = " + std::to_string(e.n) + " (K = " + e.base_group + ")";
        if (e.n <= previous) out.push_back(where + ": entries not sorted by n");
        previous = e.n;
        if (e.n % 2 != report.manifold_class.parity) {
            out.push_back(where + ": parity does not match manifold class " +
                          std::to_string(report.manifold_class.parity));
        }
        if (e.min_abelian_index < e.n) {
            out.push_back(where + ": abelian subgroup of index " + std::to_string(e.min_abelian_index) +
                          " < n");
        }
        if (e.evidence.method == Method::both &&
            *e.evidence.oracle_index != e.evidence.structural_index) {
            out.push_back(where + ": oracle index " + std::to_string(*e.evidence.oracle_index) +
                          " != structural index " + std::to_string(e.evidence.structural_index));
        }
    }
    return out;
}

}  // namespace theta
