#pragma once

// The finite theta group mu_m x (K + K^), m = |K|, with the law
//   (a, k, l) * (a', k', l') = (a + a' + <l', k>, k + k', l + l')
// written additively on root-of-unity exponents.

#include <cstdint>
#include <string>
#include <string_view>

#include "theta/abelian.hpp"
#include "theta/element_set.hpp"

namespace theta {

struct ThetaElement {
    RootExp a;
    AbElement k;
    Character l;
    friend bool operator==(const ThetaElement&, const ThetaElement&) = default;
};

class ThetaGroup {
public:
    /// Heis(K). Construction is structural only; no element tables are built.
    explicit ThetaGroup(FiniteAbelianGroup base);

    const FiniteAbelianGroup& base() const noexcept { return base_; }
    /// Order of the central cyclic factor, equal to |K|.
    std::int64_t central_order() const noexcept { return m_; }
    /// |K|^3
    std::int64_t order() const noexcept { return order_; }

    /// Throws CapExceeded when order() > cap.
    void require_enumerable(std::int64_t cap) const;

    bool contains(const ThetaElement& g) const;

    /// Mixed-radix index: a is most significant, then k coordinates, then l.
    std::int64_t index_of(const ThetaElement& g) const;
    ThetaElement element_at(std::int64_t index) const;

private:
    FiniteAbelianGroup base_;
    std::int64_t m_;
    std::int64_t order_;
};

ThetaGroup theta_group(const FiniteAbelianGroup& base);

ThetaElement identity(const ThetaGroup& group);
ThetaElement mul(const ThetaGroup& group, const ThetaElement& g, const ThetaElement& h);
ThetaElement inv(const ThetaGroup& group, const ThetaElement& g);
ThetaElement power(const ThetaGroup& group, const ThetaElement& g, std::int64_t exponent);

/// g h g^-1 h^-1 by direct multiplication.
ThetaElement commutator(const ThetaGroup& group, const ThetaElement& g, const ThetaElement& h);
/// (<l', k> - <l, k'>, 0, 0)
ThetaElement commutator_closed_form(const ThetaGroup& group, const ThetaElement& g,
                                    const ThetaElement& h);

/// Least t >= 1 with g^t = identity.
std::int64_t element_order(const ThetaGroup& group, const ThetaElement& g);

/// Elements commuting with everything, as indices in index_of numbering.
Subgroup center(const ThetaGroup& group, std::int64_t cap = kDefaultEnumerationCap);

/// Number of ordered pairs where commutator and commutator_closed_form
/// disagree. OpenMP over the first factor; the serial variant is the reference.
std::int64_t commutator_bridge_mismatches(const ThetaGroup& group,
                                          std::int64_t cap = kDefaultEnumerationCap);
std::int64_t commutator_bridge_mismatches_serial(const ThetaGroup& group,
                                                 std::int64_t cap = kDefaultEnumerationCap);

/// "(a; k1,..,kr; l1,..,lr)"
std::string format_element(const ThetaElement& g);
/// Exact inverse of format_element; validates against the group.
ThetaElement parse_element(const ThetaGroup& group, std::string_view text);

}  // namespace theta
