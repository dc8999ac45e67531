#pragma once

// Commutator pairing on K + K^ and the structural bound on abelian
// subgroups of Heis(K).
//
// e((k, l), (k', l')) = <l', k> - <l, k'>  (mod m, m = |K|)
//
// Abelian subgroups of Heis(K) map onto isotropic subgroups of K + K^, whose
// order is at most |K|. With the central mu_m this gives |A| <= |K|^2, and
// the preimage of K + {trivial} attains it, so the minimal abelian index is
// exactly |K|.

#include <cstdint>
#include <optional>
#include <span>

#include "theta/abelian.hpp"
#include "theta/element_set.hpp"
#include "theta/lattice.hpp"

namespace theta {

struct PairingPoint {
    AbElement k;
    Character l;
    friend bool operator==(const PairingPoint&, const PairingPoint&) = default;
};

class PairingSpace {
public:
    explicit PairingSpace(FiniteAbelianGroup base);

    const FiniteAbelianGroup& base() const noexcept { return base_; }
    /// Exponent modulus of pairing values, |K|.
    std::int64_t modulus() const noexcept { return base_.order(); }
    /// |K|^2
    std::int64_t size() const noexcept { return size_; }

    bool contains(const PairingPoint& p) const;
    /// k rank is most significant, then l rank.
    std::int64_t index_of(const PairingPoint& p) const;
    PairingPoint point_at(std::int64_t index) const;

    PairingPoint add(const PairingPoint& p, const PairingPoint& q) const;

    /// K + K^ under addition, in index_of numbering.
    ConcreteGroup to_concrete(std::int64_t cap = kDefaultEnumerationCap) const;

private:
    FiniteAbelianGroup base_;
    std::int64_t size_;
};

RootExp comm_pairing(const PairingSpace& space, const PairingPoint& p, const PairingPoint& q);

/// Throws std::invalid_argument when `points` is not closed under addition
/// or misses zero.
bool is_isotropic(const PairingSpace& space, std::span<const PairingPoint> points);

/// Always |K|.
std::int64_t max_isotropic_order_structural(const PairingSpace& space);
/// Largest isotropic subgroup found by enumerating all subgroups of K + K^.
std::int64_t max_isotropic_order_brute(const PairingSpace& space,
                                       std::int64_t cap = kDefaultEnumerationCap);

struct IsotropicBound {
    std::int64_t structural = 0;
    std::optional<std::int64_t> brute_force;
};

/// Structural value always; the brute-force value too when |K|^2 <= cap.
/// Throws std::logic_error if both ran and disagree.
IsotropicBound max_isotropic_order(const PairingSpace& space,
                                   std::int64_t cap = kDefaultEnumerationCap);

/// Minimal index of an abelian subgroup of Heis(K), from the structure: |K|.
std::int64_t structural_min_abelian_index(const FiniteAbelianGroup& base);

/// Image of a Heis(K) element in K + K^.
PairingPoint project(const ThetaElement& g);

}  // namespace theta
