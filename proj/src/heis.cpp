#include "theta/heis.hpp"

#include <charconv>
#include <stdexcept>

namespace theta {

namespace {

std::int64_t cube(std::int64_t x) {
    std::int64_t sq = 0;
    std::int64_t out = 0;
    if (__builtin_mul_overflow(x, x, &sq) || __builtin_mul_overflow(sq, x, &out)) {
        throw std::overflow_error("theta group order overflows 64-bit integers");
    }
    return out;
}

void require_member(const ThetaGroup& group, const ThetaElement& g) {
    if (!group.contains(g)) {
        throw ShapeMismatch("element " + format_element(g) + " does not belong to Heis(" +
                            format_group_spec(group.base()) + ")");
    }
}

std::int64_t pair(const ThetaGroup& group, const Character& l, const AbElement& k) {
    return evaluate(group.base(), l, k, group.central_order()).exponent;
}

std::int64_t count_bridge_row(const ThetaGroup& group, std::int64_t i) {
    const ThetaElement g = group.element_at(i);
    std::int64_t bad = 0;
    for (std::int64_t j = 0; j < group.order(); ++j) {
        const ThetaElement h = group.element_at(j);
        if (!(commutator(group, g, h) == commutator_closed_form(group, g, h))) ++bad;
    }
    return bad;
}

}  // namespace

ThetaGroup::ThetaGroup(FiniteAbelianGroup base)
    : base_(std::move(base)), m_(base_.order()), order_(cube(base_.order())) {}

void ThetaGroup::require_enumerable(std::int64_t cap) const {
    if (order_ > cap) {
        throw CapExceeded("Heis(" + format_group_spec(base_) + ") has " + std::to_string(order_) +
                          " elements, cap is " + std::to_string(cap));
    }
}

bool ThetaGroup::contains(const ThetaElement& g) const {
    return g.a.exponent >= 0 && g.a.exponent < m_ && is_element_of(base_, g.k.coords) &&
           is_element_of(base_, g.l.coords);
}

std::int64_t ThetaGroup::index_of(const ThetaElement& g) const {
    require_member(*this, g);
    const std::int64_t k_rank = element_rank(base_, g.k);
    const std::int64_t l_rank = element_rank(base_, AbElement{g.l.coords});
    return (g.a.exponent * base_.order() + k_rank) * base_.order() + l_rank;
}

ThetaElement ThetaGroup::element_at(std::int64_t index) const {
    if (index < 0 || index >= order_) {
        throw std::out_of_range("theta element index " + std::to_string(index) + " out of range");
    }
    const std::int64_t n = base_.order();
    const std::int64_t l_rank = index % n;
    const std::int64_t k_rank = (index / n) % n;
    const std::int64_t a = index / n / n;
    return ThetaElement{RootExp{a}, element_unrank(base_, k_rank),
                        Character{element_unrank(base_, l_rank).coords}};
}

ThetaGroup theta_group(const FiniteAbelianGroup& base) { return ThetaGroup(base); }

ThetaElement identity(const ThetaGroup& group) {
    return ThetaElement{RootExp{0}, zero(group.base()), trivial_character(group.base())};
}

ThetaElement mul(const ThetaGroup& group, const ThetaElement& g, const ThetaElement& h) {
    require_member(group, g);
    require_member(group, h);
    const std::int64_t m = group.central_order();
    const std::int64_t a = (g.a.exponent + h.a.exponent + pair(group, h.l, g.k)) % m;
    return ThetaElement{RootExp{a}, add(group.base(), g.k, h.k), add(group.base(), g.l, h.l)};
}

ThetaElement inv(const ThetaGroup& group, const ThetaElement& g) {
    require_member(group, g);
    const std::int64_t m = group.central_order();
    const std::int64_t a = mod_floor(-g.a.exponent + pair(group, g.l, g.k), m);
    return ThetaElement{RootExp{a}, neg(group.base(), g.k), neg(group.base(), g.l)};
}

ThetaElement power(const ThetaGroup& group, const ThetaElement& g, std::int64_t exponent) {
    ThetaElement base = exponent < 0 ? inv(group, g) : g;
    std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                   : static_cast<std::uint64_t>(exponent);
    ThetaElement out = identity(group);
    while (e) {
        if (e & 1u) out = mul(group, out, base);
        base = mul(group, base, base);
        e >>= 1;
    }
    return out;
}

ThetaElement commutator(const ThetaGroup& group, const ThetaElement& g, const ThetaElement& h) {
    return mul(group, mul(group, mul(group, g, h), inv(group, g)), inv(group, h));
}

ThetaElement commutator_closed_form(const ThetaGroup& group, const ThetaElement& g,
                                    const ThetaElement& h) {
    require_member(group, g);
    require_member(group, h);
    const std::int64_t e =
        mod_floor(pair(group, h.l, g.k) - pair(group, g.l, h.k), group.central_order());
    ThetaElement out = identity(group);
    out.a.exponent = e;
    return out;
}

std::int64_t element_order(const ThetaGroup& group, const ThetaElement& g) {
    const ThetaElement e = identity(group);
    ThetaElement x = g;
    // exponent of Heis(K) divides |K|^2, so this terminates well before order()
    for (std::int64_t t = 1;; ++t) {
        if (x == e) return t;
        x = mul(group, x, g);
    }
}

Subgroup center(const ThetaGroup& group, std::int64_t cap) {
    group.require_enumerable(cap);
    const ThetaElement e = identity(group);
    Subgroup out;
    for (std::int64_t i = 0; i < group.order(); ++i) {
        const ThetaElement g = group.element_at(i);
        bool central = true;
        for (std::int64_t j = 0; j < group.order() && central; ++j) {
            central = commutator_closed_form(group, g, group.element_at(j)) == e;
        }
        if (central) out.members.push_back(static_cast<ElementIndex>(i));
    }
    return out;
}

std::int64_t commutator_bridge_mismatches(const ThetaGroup& group, std::int64_t cap) {
    group.require_enumerable(cap);
    const std::int64_t n = group.order();
    std::int64_t bad = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : bad)
    for (std::int64_t i = 0; i < n; ++i) bad += count_bridge_row(group, i);
    return bad;
}

std::int64_t commutator_bridge_mismatches_serial(const ThetaGroup& group, std::int64_t cap) {
    group.require_enumerable(cap);
    std::int64_t bad = 0;
    for (std::int64_t i = 0; i < group.order(); ++i) bad += count_bridge_row(group, i);
    return bad;
}

std::string format_element(const ThetaElement& g) {
    std::string out = "(" + std::to_string(g.a.exponent) + ";";
    auto append = [&](const std::vector<std::int64_t>& coords) {
        for (std::size_t i = 0; i < coords.size(); ++i) {
            out += (i == 0 ? " " : ",");
            out += std::to_string(coords[i]);
        }
    };
    append(g.k.coords);
    out += ";";
    append(g.l.coords);
    out += ")";
    return out;
}

ThetaElement parse_element(const ThetaGroup& group, std::string_view text) {
    auto fail = [&](const char* why) -> ThetaElement {
        throw std::invalid_argument("bad theta element '" + std::string(text) + "': " + why);
    };
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') return fail("missing parentheses");
    std::string_view body = text.substr(1, text.size() - 2);

    std::vector<std::string_view> parts;
    for (std::size_t start = 0;;) {
        const std::size_t semi = body.find(';', start);
        parts.push_back(body.substr(start, semi - start));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    if (parts.size() != 3) return fail("expected three ';'-separated fields");

    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) fail("malformed integer");
        return v;
    };
    // coordinate lists are " c1,c2,..." or empty for the trivial group
    auto parse_coords = [&](std::string_view s) {
        std::vector<std::int64_t> coords;
        if (s.empty()) return coords;
        if (s.front() != ' ') fail("coordinate list must start with a space");
        s.remove_prefix(1);
        for (std::size_t start = 0;;) {
            const std::size_t comma = s.find(',', start);
            coords.push_back(parse_int(s.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return coords;
    };

    ThetaElement g{RootExp{parse_int(parts[0])}, AbElement{parse_coords(parts[1])},
                   Character{parse_coords(parts[2])}};
    if (!group.contains(g)) return fail("not an element of the group");
    return g;
}

}  // namespace theta
