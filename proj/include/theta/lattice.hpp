#pragma once

// Subgroup engine over dense multiplication tables: closure, commutation,
// the search for maximal abelian subgroups and the minimal abelian index.
//
// Kernels that have an OpenMP version keep a `_serial` twin. The twins run
// the same algorithm single-threaded and are the reference the parallel
// versions are tested against.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "theta/abelian.hpp"
#include "theta/element_set.hpp"
#include "theta/heis.hpp"

namespace theta {

inline constexpr std::int64_t kDefaultOracleCap = 512;

/// Raised when a multiplication table fails the group axioms.
class InvalidGroup : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConcreteGroup {
public:
    using MulFn = std::function<ElementIndex(ElementIndex, ElementIndex)>;

    /// Row-major table, table[a * order + b] = a*b. Identity and inverses are
    /// derived; associativity is spot-checked on `spot_checks` random triples
    /// drawn from `seed` (exhaustively when order^3 <= spot_checks).
    static ConcreteGroup from_table(std::size_t order, std::vector<ElementIndex> table,
                                    std::uint64_t seed = 0, std::size_t spot_checks = 20000);
    /// Fills the table by calling `fn` (rows in parallel), then as from_table.
    static ConcreteGroup from_function(std::size_t order, const MulFn& fn, std::uint64_t seed = 0);

    /// Heis(K) in ThetaGroup::index_of numbering.
    static ConcreteGroup from_theta(const ThetaGroup& group, std::int64_t cap = kDefaultEnumerationCap,
                                    std::uint64_t seed = 0);
    /// K under addition, in element_rank numbering.
    static ConcreteGroup from_abelian(const FiniteAbelianGroup& group,
                                      std::int64_t cap = kDefaultEnumerationCap);
    static ConcreteGroup cyclic(std::size_t n);

    std::size_t order() const noexcept { return order_; }
    ElementIndex identity() const noexcept { return identity_; }
    ElementIndex mul(ElementIndex a, ElementIndex b) const noexcept { return table_[a * order_ + b]; }
    ElementIndex inverse(ElementIndex a) const noexcept { return inverse_[a]; }
    bool commute(ElementIndex a, ElementIndex b) const noexcept { return commuting_[a].contains(b); }
    /// Centraliser of a single element.
    const ElementSet& centralizer_of(ElementIndex a) const noexcept { return commuting_[a]; }

private:
    ConcreteGroup() = default;

    std::size_t order_ = 0;
    ElementIndex identity_ = 0;
    std::vector<ElementIndex> table_;
    std::vector<ElementIndex> inverse_;
    std::vector<ElementSet> commuting_;
};

Subgroup closure(const ConcreteGroup& group, std::span<const ElementIndex> generators);
ElementSet closure_set(const ConcreteGroup& group, std::span<const ElementIndex> generators);

/// True iff `members` contains the identity and is closed under products and inverses.
bool is_subgroup(const ConcreteGroup& group, const Subgroup& members);
bool is_abelian(const ConcreteGroup& group, const Subgroup& subgroup);

Subgroup center(const ConcreteGroup& group);
std::int64_t element_order(const ConcreteGroup& group, ElementIndex g);
/// element order -> number of elements with that order
std::map<std::int64_t, std::int64_t> order_sequence(const ConcreteGroup& group,
                                                    std::int64_t cap = kDefaultEnumerationCap);

struct AbelianSearchResult {
    std::size_t max_order = 1;
    /// Every maximal abelian subgroup, sorted.
    std::vector<Subgroup> maximal;
    /// Distinct abelian subgroups visited (all contain the center).
    std::size_t visited = 0;
};

/// Exhaustive search for maximal abelian subgroups. Seeds are <Z(G), g> for
/// each g; from an abelian A the search adjoins each element of C_G(A) \ A,
/// memoising member sets. A is recorded when C_G(A) = A.
AbelianSearchResult abelian_search(const ConcreteGroup& group, std::int64_t cap = kDefaultOracleCap);
AbelianSearchResult abelian_search_serial(const ConcreteGroup& group,
                                          std::int64_t cap = kDefaultOracleCap);

std::int64_t max_abelian_order(const ConcreteGroup& group, std::int64_t cap = kDefaultOracleCap);
std::int64_t max_abelian_order_serial(const ConcreteGroup& group,
                                      std::int64_t cap = kDefaultOracleCap);
/// |G| / max_abelian_order(G)
std::int64_t min_abelian_index(const ConcreteGroup& group, std::int64_t cap = kDefaultOracleCap);

/// All subgroups, by iterated extension of known subgroups with one element
/// and member-set dedup. Intended for small (e.g. abelian) groups.
std::vector<Subgroup> enumerate_subgroups(const ConcreteGroup& group,
                                          std::int64_t cap = kDefaultEnumerationCap);

/// Triples (a, b, c) with (ab)c != a(bc); OpenMP over a.
std::int64_t associativity_failures(const ConcreteGroup& group);
std::int64_t associativity_failures_serial(const ConcreteGroup& group);

}  // namespace theta
