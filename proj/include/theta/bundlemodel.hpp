#pragma once

// Level-n data for the family G_n = mu_n x (Z_n + Z_n^), the parity
// classification of the S^2-bundle total spaces Y_n over T^2, and the
// per-class verification reports and Jordan-violation certificates.
//
// Model: H(xi_1) is trivial, so H(xi_n) is the n-torsion Z_n + Z_n of the
// torus and N = n^2 exactly. The equality |H(xi_n)| = n^2 is a property of
// this model; in general only |H(xi_n)| >= n^2 holds.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "theta/abelian.hpp"
#include "theta/heis.hpp"
#include "theta/lattice.hpp"

namespace theta {

/// Parity class of Y_n: 0 is T^2 x S^2, 1 the nontrivial orientable bundle.
struct DiffeoClass {
    int parity = 0;
    std::string_view manifold() const noexcept;
    friend bool operator==(const DiffeoClass&, const DiffeoClass&) = default;
};

struct LevelData {
    std::int64_t n;
    std::int64_t N;
    FiniteAbelianGroup K;
    ThetaGroup theta;
};

enum class Mode { oracle, structural, both };
/// Which computation produced a bound.
enum class Method { oracle, structural, both };

std::string_view to_string(Mode mode) noexcept;
std::string_view to_string(Method method) noexcept;
std::optional<Mode> parse_mode(std::string_view text) noexcept;

/// k-torsion of T^2 in the model: Z_k + Z_k.
FiniteAbelianGroup torsion_group(std::int64_t k);
/// Natural inclusion of torsion_group(d) into torsion_group(k) for d | k: x -> (k/d) x.
AbElement embed_torsion(std::int64_t d, std::int64_t k, const AbElement& x);

LevelData level_data(std::int64_t n);
/// Level data for an arbitrary K; n is |K| (= sqrt N).
LevelData level_data_for_base(const FiniteAbelianGroup& base);

DiffeoClass diffeo_class(std::int64_t chern_number);
/// Levels 1 <= n <= n_max with n = class parity (mod 2), ascending.
std::vector<LevelData> family_for_class(DiffeoClass manifold_class, std::int64_t n_max);

struct Evidence {
    Method method = Method::structural;
    std::optional<std::int64_t> oracle_index;
    std::int64_t structural_index = 0;
};

struct Certificate {
    std::int64_t threshold = 0;
    std::int64_t n = 0;
    std::int64_t min_abelian_index = 0;
    Evidence evidence;
};

struct LevelOptions {
    Mode mode = Mode::both;
    std::int64_t oracle_cap = kDefaultOracleCap;
    std::uint64_t seed = 0;
    /// Test hook: build the concrete group with the cocycle term dropped
    /// (an abelian group of the same order), so the oracle must report a
    /// violation.
    bool corrupt_multiplication = false;
};

/// Evidence that min_abelian_index(Heis(K)) is what it is. Oracle evidence is
/// used when the mode allows it and |Heis(K)| <= oracle_cap; structural
/// otherwise. In mode both a disagreement is reported, not hidden: the
/// returned evidence carries both values.
Evidence abelian_index_evidence(const ThetaGroup& group, const LevelOptions& options);

/// Smallest n of the class's parity with n > threshold, with evidence that
/// min_abelian_index(G_n) >= n > threshold.
Certificate jordan_certificate(DiffeoClass manifold_class, std::int64_t threshold,
                               const LevelOptions& options = {});

struct ReportEntry {
    std::int64_t n = 0;
    std::string base_group;
    std::int64_t group_order = 0;
    std::int64_t max_abelian_order = 0;
    std::int64_t min_abelian_index = 0;
    Evidence evidence;
    double elapsed_ms = 0.0;
};

struct ThresholdCertificate {
    std::int64_t threshold = 0;
    std::int64_t n = 0;
};

struct VerificationReport {
    DiffeoClass manifold_class;
    std::vector<ReportEntry> entries;
    std::vector<ThresholdCertificate> threshold_certificates;
};

ReportEntry verify_level(const LevelData& level, const LevelOptions& options);

/// One entry per level of the class up to n_max, plus threshold certificates
/// for c in the 1-2-5 series below the largest index reached.
VerificationReport verify_class(DiffeoClass manifold_class, std::int64_t n_max,
                                const LevelOptions& options);

/// Report for a single user-supplied K, classed by the parity of |K|.
VerificationReport verify_base(const FiniteAbelianGroup& base, const LevelOptions& options);

/// Human-readable violations: min index below n, oracle/structural
/// disagreement, or an entry of the wrong parity.
std::vector<std::string> find_violations(const VerificationReport& report);

}  // namespace theta
