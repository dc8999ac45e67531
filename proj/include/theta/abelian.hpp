#pragma once

// Finite abelian groups in invariant-factor form, their character groups and
// the evaluation pairing. Everything is integer arithmetic; a root of unity
// zeta^e with zeta = exp(2*pi*i/m) is carried as the exponent e mod m.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace theta {

inline constexpr std::int64_t kDefaultEnumerationCap = 4096;

/// Raised when an operation would enumerate more elements than allowed.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an element, character or point does not fit its group.
class ShapeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class FiniteAbelianGroup {
public:
    /// Trivial group.
    FiniteAbelianGroup() = default;

    /// Canonical form of the direct sum of cyclic groups of the given orders.
    /// Factors equal to 1 are dropped; factors <= 0 are rejected.
    static FiniteAbelianGroup make(std::span<const std::int64_t> cyclic_factors);
    static FiniteAbelianGroup make(std::initializer_list<std::int64_t> cyclic_factors);

    const std::vector<std::int64_t>& invariant_factors() const noexcept { return factors_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    std::int64_t order() const noexcept { return order_; }
    bool is_trivial() const noexcept { return factors_.empty(); }

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 1;
};

struct AbElement {
    std::vector<std::int64_t> coords;
    friend bool operator==(const AbElement&, const AbElement&) = default;
    friend auto operator<=>(const AbElement&, const AbElement&) = default;
};

/// A character of K, coordinatised by K's own invariant factors: the
/// coordinates c_i describe k -> prod_i exp(2*pi*i * c_i * x_i / d_i).
struct Character {
    std::vector<std::int64_t> coords;
    friend bool operator==(const Character&, const Character&) = default;
    friend auto operator<=>(const Character&, const Character&) = default;
};

/// zeta^exponent for the ambient m held by the caller.
struct RootExp {
    std::int64_t exponent = 0;
    friend bool operator==(const RootExp&, const RootExp&) = default;
};

/// Non-negative residue of value mod modulus (modulus > 0).
constexpr std::int64_t mod_floor(std::int64_t value, std::int64_t modulus) {
    const std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

// Elements
AbElement zero(const FiniteAbelianGroup& group);
AbElement add(const FiniteAbelianGroup& group, const AbElement& x, const AbElement& y);
AbElement neg(const FiniteAbelianGroup& group, const AbElement& x);
AbElement scale(const FiniteAbelianGroup& group, const AbElement& x, std::int64_t times);
bool is_element_of(const FiniteAbelianGroup& group, std::span<const std::int64_t> coords);

// Characters (same coordinate shape, pointwise product = coordinate sum)
Character trivial_character(const FiniteAbelianGroup& group);
Character add(const FiniteAbelianGroup& group, const Character& x, const Character& y);
Character neg(const FiniteAbelianGroup& group, const Character& x);

/// All elements in lexicographic coordinate order; index 0 is zero.
std::vector<AbElement> enumerate_elements(const FiniteAbelianGroup& group,
                                          std::int64_t cap = kDefaultEnumerationCap);

/// Mixed-radix rank of an element in enumerate_elements order, and its inverse.
std::int64_t element_rank(const FiniteAbelianGroup& group, const AbElement& x);
AbElement element_unrank(const FiniteAbelianGroup& group, std::int64_t rank);

/// Exponent of l(k) relative to exp(2*pi*i/m): sum_i c_i * x_i * (m / d_i) mod m.
/// Every invariant factor must divide m.
RootExp evaluate(const FiniteAbelianGroup& group, const Character& l, const AbElement& k,
                 std::int64_t m);
/// evaluate with the default ambient order m = |K|.
RootExp evaluate(const FiniteAbelianGroup& group, const Character& l, const AbElement& k);

/// Exhaustive check that the evaluation pairing K^ x K -> mu_m is nondegenerate
/// on both sides.
bool is_pairing_nondegenerate(const FiniteAbelianGroup& group,
                              std::int64_t cap = kDefaultEnumerationCap);

/// Parses "Z4xZ2"-style specs (case-insensitive, no whitespace).
FiniteAbelianGroup parse_group_spec(std::string_view spec);
/// "Z4xZ2"; the trivial group renders as "Z1".
std::string format_group_spec(const FiniteAbelianGroup& group);

}  // namespace theta
