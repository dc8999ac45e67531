#include "theta/symplectic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace theta {

namespace {

std::int64_t square(std::int64_t x) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(x, x, &out)) throw std::overflow_error("pairing space too large");
    return out;
}

void require_point(const PairingSpace& space, const PairingPoint& p) {
    if (!space.contains(p)) {
        throw ShapeMismatch("point does not belong to the pairing space of " +
                            format_group_spec(space.base()));
    }
}

}  // namespace

PairingSpace::PairingSpace(FiniteAbelianGroup base)
    : base_(std::move(base)), size_(square(base_.order())) {}

bool PairingSpace::contains(const PairingPoint& p) const {
    return is_element_of(base_, p.k.coords) && is_element_of(base_, p.l.coords);
}

std::int64_t PairingSpace::index_of(const PairingPoint& p) const {
    require_point(*this, p);
    return element_rank(base_, p.k) * base_.order() + element_rank(base_, AbElement{p.l.coords});
}

PairingPoint PairingSpace::point_at(std::int64_t index) const {
    if (index < 0 || index >= size_) throw std::out_of_range("pairing point index out of range");
    return PairingPoint{element_unrank(base_, index / base_.order()),
                        Character{element_unrank(base_, index % base_.order()).coords}};
}

PairingPoint PairingSpace::add(const PairingPoint& p, const PairingPoint& q) const {
    return PairingPoint{theta::add(base_, p.k, q.k), theta::add(base_, p.l, q.l)};
}

ConcreteGroup PairingSpace::to_concrete(std::int64_t cap) const {
    if (size_ > cap) {
        throw CapExceeded("pairing space of " + format_group_spec(base_) + " has " +
                          std::to_string(size_) + " points, cap is " + std::to_string(cap));
    }
    std::vector<PairingPoint> points;
    points.reserve(static_cast<std::size_t>(size_));
    for (std::int64_t i = 0; i < size_; ++i) points.push_back(point_at(i));
    return ConcreteGroup::from_function(static_cast<std::size_t>(size_), [&](ElementIndex a, ElementIndex b) {
        return static_cast<ElementIndex>(index_of(add(points[a], points[b])));
    });
}

RootExp comm_pairing(const PairingSpace& space, const PairingPoint& p, const PairingPoint& q) {
    require_point(space, p);
    require_point(space, q);
    const std::int64_t m = space.modulus();
    const std::int64_t forward = evaluate(space.base(), q.l, p.k, m).exponent;
    const std::int64_t backward = evaluate(space.base(), p.l, q.k, m).exponent;
    return RootExp{mod_floor(forward - backward, m)};
}

bool is_isotropic(const PairingSpace& space, std::span<const PairingPoint> points) {
    const PairingPoint origin{zero(space.base()), trivial_character(space.base())};
    if (std::find(points.begin(), points.end(), origin) == points.end()) {
        throw std::invalid_argument("point set is not a subgroup: zero missing");
    }
    std::vector<std::int64_t> indices;
    indices.reserve(points.size());
    for (const auto& p : points) indices.push_back(space.index_of(p));
    std::sort(indices.begin(), indices.end());

    bool isotropic = true;
    for (const auto& p : points) {
        for (const auto& q : points) {
            if (!std::binary_search(indices.begin(), indices.end(), space.index_of(space.add(p, q)))) {
                throw std::invalid_argument("point set is not a subgroup: not closed under addition");
            }
            if (comm_pairing(space, p, q).exponent != 0) isotropic = false;
        }
    }
    return isotropic;
}

std::int64_t max_isotropic_order_structural(const PairingSpace& space) { return space.base().order(); }

std::int64_t max_isotropic_order_brute(const PairingSpace& space, std::int64_t cap) {
    const ConcreteGroup group = space.to_concrete(cap);
    std::vector<PairingPoint> points;
    points.reserve(static_cast<std::size_t>(space.size()));
    for (std::int64_t i = 0; i < space.size(); ++i) points.push_back(space.point_at(i));

    std::int64_t best = 1;
    for (const Subgroup& s : enumerate_subgroups(group, cap)) {
        if (static_cast<std::int64_t>(s.order()) <= best) continue;
        bool isotropic = true;
        for (std::size_t i = 0; i < s.members.size() && isotropic; ++i) {
            for (std::size_t j = i + 1; j < s.members.size() && isotropic; ++j) {
                isotropic = comm_pairing(space, points[s.members[i]], points[s.members[j]]).exponent == 0;
            }
        }
        if (isotropic) best = static_cast<std::int64_t>(s.order());
    }
    return best;
}

IsotropicBound max_isotropic_order(const PairingSpace& space, std::int64_t cap) {
    IsotropicBound bound{max_isotropic_order_structural(space), std::nullopt};
    if (space.size() <= cap) {
        bound.brute_force = max_isotropic_order_brute(space, cap);
        if (*bound.brute_force != bound.structural) {
            throw std::logic_error("isotropic bound mismatch for " + format_group_spec(space.base()) +
                                   ": brute force " + std::to_string(*bound.brute_force) +
                                   ", structural " + std::to_string(bound.structural));
        }
    }
    return bound;
}

std::int64_t structural_min_abelian_index(const FiniteAbelianGroup& base) { return base.order(); }

PairingPoint project(const ThetaElement& g) { return PairingPoint{g.k, g.l}; }

}  // namespace theta
