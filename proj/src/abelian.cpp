#include "theta/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>

namespace theta {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("group order overflows 64-bit integers");
    }
    return out;
}

// prime -> exponents of the prime-power cyclic summands
void split_prime_powers(std::int64_t value, std::map<std::int64_t, std::vector<std::int64_t>>& out) {
    for (std::int64_t p = 2; p <= value / p; ++p) {
        if (value % p != 0) continue;
        std::int64_t power = 1;
        while (value % p == 0) {
            value /= p;
            power *= p;
        }
        out[p].push_back(power);
    }
    if (value > 1) out[value].push_back(value);
}

void require_shape(const FiniteAbelianGroup& group, std::size_t size, const char* what) {
    if (size != group.rank()) {
        throw ShapeMismatch(std::string(what) + " has " + std::to_string(size) +
                            " coordinates, group " + format_group_spec(group) + " has rank " +
                            std::to_string(group.rank()));
    }
}

void require_reduced(const FiniteAbelianGroup& group, std::span<const std::int64_t> coords,
                     const char* what) {
    require_shape(group, coords.size(), what);
    if (!is_element_of(group, coords)) {
        throw ShapeMismatch(std::string(what) + " has an unreduced coordinate");
    }
}

std::vector<std::int64_t> coordwise(const FiniteAbelianGroup& group,
                                    std::span<const std::int64_t> x,
                                    std::span<const std::int64_t> y) {
    const auto& d = group.invariant_factors();
    std::vector<std::int64_t> out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out[i] = (x[i] + y[i]) % d[i];
    return out;
}

std::vector<std::int64_t> coordwise_neg(const FiniteAbelianGroup& group,
                                        std::span<const std::int64_t> x) {
    const auto& d = group.invariant_factors();
    std::vector<std::int64_t> out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out[i] = mod_floor(-x[i], d[i]);
    return out;
}

}  // namespace

FiniteAbelianGroup FiniteAbelianGroup::make(std::span<const std::int64_t> cyclic_factors) {
    std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
    std::int64_t order = 1;
    for (const std::int64_t f : cyclic_factors) {
        if (f <= 0) {
            throw std::invalid_argument("cyclic factor must be positive, got " + std::to_string(f));
        }
        order = checked_mul(order, f);
        split_prime_powers(f, by_prime);
    }

    std::size_t rank = 0;
    for (auto& [p, powers] : by_prime) {
        std::sort(powers.begin(), powers.end(), std::greater<>());
        rank = std::max(rank, powers.size());
    }
    // The i-th largest invariant factor collects the i-th largest power of every prime.
    std::vector<std::int64_t> factors(rank, 1);
    for (const auto& [p, powers] : by_prime) {
        for (std::size_t i = 0; i < powers.size(); ++i) factors[rank - 1 - i] *= powers[i];
    }

    FiniteAbelianGroup group;
    group.factors_ = std::move(factors);
    group.order_ = order;
    return group;
}

FiniteAbelianGroup FiniteAbelianGroup::make(std::initializer_list<std::int64_t> cyclic_factors) {
    return make(std::span<const std::int64_t>(cyclic_factors.begin(), cyclic_factors.size()));
}

bool is_element_of(const FiniteAbelianGroup& group, std::span<const std::int64_t> coords) {
    const auto& d = group.invariant_factors();
    if (coords.size() != d.size()) return false;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= d[i]) return false;
    }
    return true;
}

AbElement zero(const FiniteAbelianGroup& group) {
    return AbElement{std::vector<std::int64_t>(group.rank(), 0)};
}

AbElement add(const FiniteAbelianGroup& group, const AbElement& x, const AbElement& y) {
    require_reduced(group, x.coords, "element");
    require_reduced(group, y.coords, "element");
    return AbElement{coordwise(group, x.coords, y.coords)};
}

AbElement neg(const FiniteAbelianGroup& group, const AbElement& x) {
    require_reduced(group, x.coords, "element");
    return AbElement{coordwise_neg(group, x.coords)};
}

AbElement scale(const FiniteAbelianGroup& group, const AbElement& x, std::int64_t times) {
    require_reduced(group, x.coords, "element");
    const auto& d = group.invariant_factors();
    AbElement out{std::vector<std::int64_t>(d.size())};
    for (std::size_t i = 0; i < d.size(); ++i) {
        // reduce the multiplier first so the product stays below d_i^2
        out.coords[i] = (x.coords[i] * mod_floor(times, d[i])) % d[i];
    }
    return out;
}

Character trivial_character(const FiniteAbelianGroup& group) {
    return Character{std::vector<std::int64_t>(group.rank(), 0)};
}

Character add(const FiniteAbelianGroup& group, const Character& x, const Character& y) {
    require_reduced(group, x.coords, "character");
    require_reduced(group, y.coords, "character");
    return Character{coordwise(group, x.coords, y.coords)};
}

Character neg(const FiniteAbelianGroup& group, const Character& x) {
    require_reduced(group, x.coords, "character");
    return Character{coordwise_neg(group, x.coords)};
}

std::vector<AbElement> enumerate_elements(const FiniteAbelianGroup& group, std::int64_t cap) {
    if (group.order() > cap) {
        throw CapExceeded("group " + format_group_spec(group) + " has " +
                          std::to_string(group.order()) + " elements, cap is " +
                          std::to_string(cap));
    }
    std::vector<AbElement> out;
    out.reserve(static_cast<std::size_t>(group.order()));
    for (std::int64_t r = 0; r < group.order(); ++r) out.push_back(element_unrank(group, r));
    return out;
}

std::int64_t element_rank(const FiniteAbelianGroup& group, const AbElement& x) {
    require_reduced(group, x.coords, "element");
    std::int64_t r = 0;
    const auto& d = group.invariant_factors();
    for (std::size_t i = 0; i < d.size(); ++i) r = r * d[i] + x.coords[i];
    return r;
}

AbElement element_unrank(const FiniteAbelianGroup& group, std::int64_t rank) {
    if (rank < 0 || rank >= group.order()) {
        throw std::out_of_range("element rank " + std::to_string(rank) + " out of range");
    }
    const auto& d = group.invariant_factors();
    AbElement x{std::vector<std::int64_t>(d.size())};
    for (std::size_t i = d.size(); i-- > 0;) {
        x.coords[i] = rank % d[i];
        rank /= d[i];
    }
    return x;
}

RootExp evaluate(const FiniteAbelianGroup& group, const Character& l, const AbElement& k,
                 std::int64_t m) {
    require_reduced(group, l.coords, "character");
    require_reduced(group, k.coords, "element");
    if (m <= 0) throw std::invalid_argument("root-of-unity order must be positive");
    const auto& d = group.invariant_factors();
    std::int64_t e = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (m % d[i] != 0) {
            throw std::invalid_argument("invariant factor " + std::to_string(d[i]) +
                                        " does not divide m = " + std::to_string(m));
        }
        const std::int64_t cx = (l.coords[i] * k.coords[i]) % d[i];
        e = (e + cx * (m / d[i])) % m;
    }
    return RootExp{e};
}

RootExp evaluate(const FiniteAbelianGroup& group, const Character& l, const AbElement& k) {
    return evaluate(group, l, k, group.order());
}

bool is_pairing_nondegenerate(const FiniteAbelianGroup& group, std::int64_t cap) {
    const auto elements = enumerate_elements(group, cap);
    // characters share the element coordinates
    std::vector<Character> characters;
    characters.reserve(elements.size());
    for (const auto& e : elements) characters.push_back(Character{e.coords});

    for (std::size_t i = 1; i < elements.size(); ++i) {
        const bool separated = std::any_of(characters.begin(), characters.end(), [&](const auto& l) {
            return evaluate(group, l, elements[i]).exponent != 0;
        });
        if (!separated) return false;
    }
    for (std::size_t j = 1; j < characters.size(); ++j) {
        const bool separated = std::any_of(elements.begin(), elements.end(), [&](const auto& k) {
            return evaluate(group, characters[j], k).exponent != 0;
        });
        if (!separated) return false;
    }
    return true;
}

FiniteAbelianGroup parse_group_spec(std::string_view spec) {
    auto fail = [&](const std::string& why) -> FiniteAbelianGroup {
        throw std::invalid_argument("bad group spec '" + std::string(spec) + "': " + why);
    };
    if (spec.empty()) return fail("empty");

    std::vector<std::int64_t> factors;
    std::size_t pos = 0;
    while (true) {
        if (pos >= spec.size() || (spec[pos] != 'Z' && spec[pos] != 'z')) {
            return fail("expected 'Z' at offset " + std::to_string(pos));
        }
        ++pos;
        std::size_t end = pos;
        while (end < spec.size() && std::isdigit(static_cast<unsigned char>(spec[end]))) ++end;
        if (end == pos) return fail("missing cyclic order after 'Z'");
        std::int64_t d = 0;
        const auto [ptr, ec] = std::from_chars(spec.data() + pos, spec.data() + end, d);
        if (ec != std::errc{} || ptr != spec.data() + end) return fail("cyclic order out of range");
        if (d <= 0) return fail("cyclic order must be positive");
        factors.push_back(d);
        pos = end;
        if (pos == spec.size()) break;
        if (spec[pos] != 'x' && spec[pos] != 'X') {
            return fail("expected 'x' at offset " + std::to_string(pos));
        }
        ++pos;
    }
    return FiniteAbelianGroup::make(factors);
}

std::string format_group_spec(const FiniteAbelianGroup& group) {
    if (group.is_trivial()) return "Z1";
    std::string out;
    for (const std::int64_t d : group.invariant_factors()) {
        if (!out.empty()) out += 'x';
        out += 'Z';
        out += std::to_string(d);
    }
    return out;
}

}  // namespace theta
