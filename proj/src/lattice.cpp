#include "theta/lattice.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>

namespace theta {

namespace {

void require_order_at_most(const ConcreteGroup& group, std::int64_t cap, const char* what) {
    if (static_cast<std::int64_t>(group.order()) > cap) {
        throw CapExceeded(std::string(what) + ": group of order " + std::to_string(group.order()) +
                          " exceeds cap " + std::to_string(cap));
    }
}

void require_index(const ConcreteGroup& group, ElementIndex i) {
    if (i >= group.order()) {
        throw std::out_of_range("element index " + std::to_string(i) + " out of range for order " +
                                std::to_string(group.order()));
    }
}

// Insert-if-absent set of member sets, sharded so concurrent searches rarely contend.
class SharedMemo {
public:
    bool insert(const ElementSet& s) {
        const std::size_t h = s.hash();
        Shard& shard = shards_[h % shards_.size()];
        std::lock_guard lock(shard.mutex);
        return shard.seen.insert(s).second;
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& shard : shards_) n += shard.seen.size();
        return n;
    }

private:
    struct Shard {
        std::mutex mutex;
        std::unordered_set<ElementSet, ElementSetHash> seen;
    };
    std::array<Shard, 64> shards_;
};

// <A, g> for abelian A and g centralising A: the union of the cosets A g^i.
ElementSet adjoin_commuting(const ConcreteGroup& group, const ElementSet& a_set,
                            const std::vector<ElementIndex>& a_members, ElementIndex g) {
    ElementSet out = a_set;
    for (ElementIndex power = g; !a_set.contains(power); power = group.mul(power, g)) {
        for (const ElementIndex a : a_members) out.insert(group.mul(a, power));
    }
    return out;
}

ElementSet centralizer(const ConcreteGroup& group, const ElementSet& members) {
    ElementSet c(group.order());
    for (ElementIndex i = 0; i < group.order(); ++i) c.insert(i);
    members.for_each([&](ElementIndex x) { c &= group.centralizer_of(x); });
    return c;
}

void grow(const ConcreteGroup& group, const ElementSet& current, const ElementSet& cent,
          SharedMemo& memo, std::vector<Subgroup>& maximal) {
    const ElementSet candidates = cent.minus(current);
    if (candidates.count() == 0) {
        maximal.push_back(Subgroup::from_set(current));
        return;
    }
    const std::vector<ElementIndex> members = current.to_vector();
    candidates.for_each([&](ElementIndex g) {
        ElementSet next = adjoin_commuting(group, current, members, g);
        if (!memo.insert(next)) return;
        ElementSet next_cent = cent;
        next_cent &= group.centralizer_of(g);
        grow(group, next, next_cent, memo, maximal);
    });
}

std::vector<ElementSet> center_seeds(const ConcreteGroup& group) {
    const Subgroup z = center(group);
    const ElementSet z_set = z.to_set(group.order());
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> seeds;
    seeds.push_back(z_set);
    seen.insert(z_set);
    for (ElementIndex g = 0; g < group.order(); ++g) {
        if (z_set.contains(g)) continue;
        ElementSet s = adjoin_commuting(group, z_set, z.members, g);
        if (seen.insert(s).second) seeds.push_back(std::move(s));
    }
    return seeds;
}

AbelianSearchResult finish(std::vector<Subgroup> maximal, const SharedMemo& memo) {
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    AbelianSearchResult result;
    result.visited = memo.size();
    for (const auto& s : maximal) result.max_order = std::max(result.max_order, s.order());
    result.maximal = std::move(maximal);
    return result;
}

std::int64_t associativity_row(const ConcreteGroup& group, ElementIndex a) {
    std::int64_t bad = 0;
    const auto n = static_cast<ElementIndex>(group.order());
    for (ElementIndex b = 0; b < n; ++b) {
        const ElementIndex ab = group.mul(a, b);
        for (ElementIndex c = 0; c < n; ++c) {
            if (group.mul(ab, c) != group.mul(a, group.mul(b, c))) ++bad;
        }
    }
    return bad;
}

}  // namespace

ConcreteGroup ConcreteGroup::from_table(std::size_t order, std::vector<ElementIndex> table,
                                        std::uint64_t seed, std::size_t spot_checks) {
    if (order == 0) throw InvalidGroup("a group needs at least one element");
    if (table.size() != order * order) throw InvalidGroup("multiplication table has the wrong size");
    for (const auto v : table) {
        if (v >= order) throw InvalidGroup("multiplication table entry out of range");
    }

    ConcreteGroup g;
    g.order_ = order;
    g.table_ = std::move(table);

    // every row and column a permutation
    std::vector<char> seen(order);
    for (std::size_t a = 0; a < order; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t b = 0; b < order; ++b) {
            if (std::exchange(seen[g.table_[a * order + b]], 1)) {
                throw InvalidGroup("row " + std::to_string(a) + " is not a permutation");
            }
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t b = 0; b < order; ++b) {
            if (std::exchange(seen[g.table_[b * order + a]], 1)) {
                throw InvalidGroup("column " + std::to_string(a) + " is not a permutation");
            }
        }
    }

    bool found = false;
    for (std::size_t e = 0; e < order && !found; ++e) {
        found = true;
        for (std::size_t b = 0; b < order && found; ++b) {
            found = g.table_[e * order + b] == b && g.table_[b * order + e] == b;
        }
        if (found) g.identity_ = static_cast<ElementIndex>(e);
    }
    if (!found) throw InvalidGroup("no two-sided identity");

    g.inverse_.assign(order, 0);
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            if (g.table_[a * order + b] == g.identity_) {
                if (g.table_[b * order + a] != g.identity_) {
                    throw InvalidGroup("left and right inverses differ for " + std::to_string(a));
                }
                g.inverse_[a] = static_cast<ElementIndex>(b);
                break;
            }
        }
    }

    if (order * order * order <= spot_checks) {
        if (associativity_failures_serial(g) != 0) throw InvalidGroup("table is not associative");
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(order - 1));
        for (std::size_t t = 0; t < spot_checks; ++t) {
            const ElementIndex a = pick(rng), b = pick(rng), c = pick(rng);
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
                throw InvalidGroup("table is not associative at (" + std::to_string(a) + ", " +
                                   std::to_string(b) + ", " + std::to_string(c) + ")");
            }
        }
    }

    g.commuting_.assign(order, ElementSet(order));
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            if (g.table_[a * order + b] == g.table_[b * order + a]) {
                g.commuting_[a].insert(static_cast<ElementIndex>(b));
            }
        }
    }
    return g;
}

ConcreteGroup ConcreteGroup::from_function(std::size_t order, const MulFn& fn, std::uint64_t seed) {
    std::vector<ElementIndex> table(order * order);
    const auto n = static_cast<std::int64_t>(order);
#pragma omp parallel for schedule(static)
    for (std::int64_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            table[static_cast<std::size_t>(a) * order + b] =
                fn(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b));
        }
    }
    return from_table(order, std::move(table), seed);
}

ConcreteGroup ConcreteGroup::from_theta(const ThetaGroup& group, std::int64_t cap, std::uint64_t seed) {
    group.require_enumerable(cap);
    const auto n = static_cast<std::size_t>(group.order());
    std::vector<ThetaElement> elements;
    elements.reserve(n);
    for (std::size_t i = 0; i < n; ++i) elements.push_back(group.element_at(static_cast<std::int64_t>(i)));
    return from_function(
        n,
        [&](ElementIndex a, ElementIndex b) {
            return static_cast<ElementIndex>(group.index_of(theta::mul(group, elements[a], elements[b])));
        },
        seed);
}

ConcreteGroup ConcreteGroup::from_abelian(const FiniteAbelianGroup& group, std::int64_t cap) {
    const auto elements = enumerate_elements(group, cap);
    return from_function(elements.size(), [&](ElementIndex a, ElementIndex b) {
        return static_cast<ElementIndex>(element_rank(group, add(group, elements[a], elements[b])));
    });
}

ConcreteGroup ConcreteGroup::cyclic(std::size_t n) {
    return from_function(n, [n](ElementIndex a, ElementIndex b) {
        return static_cast<ElementIndex>((a + b) % n);
    });
}

ElementSet closure_set(const ConcreteGroup& group, std::span<const ElementIndex> generators) {
    for (const auto g : generators) require_index(group, g);
    ElementSet members(group.order());
    std::vector<ElementIndex> queue{group.identity()};
    members.insert(group.identity());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const ElementIndex x = queue[head];
        for (const ElementIndex g : generators) {
            const ElementIndex y = group.mul(x, g);
            if (!members.contains(y)) {
                members.insert(y);
                queue.push_back(y);
            }
        }
    }
    return members;
}

Subgroup closure(const ConcreteGroup& group, std::span<const ElementIndex> generators) {
    return Subgroup::from_set(closure_set(group, generators));
}

bool is_subgroup(const ConcreteGroup& group, const Subgroup& s) {
    if (!std::is_sorted(s.members.begin(), s.members.end())) return false;
    if (std::adjacent_find(s.members.begin(), s.members.end()) != s.members.end()) return false;
    for (const auto x : s.members) {
        if (x >= group.order()) return false;
    }
    if (!s.contains(group.identity())) return false;
    const ElementSet set = s.to_set(group.order());
    for (const auto x : s.members) {
        if (!set.contains(group.inverse(x))) return false;
        for (const auto y : s.members) {
            if (!set.contains(group.mul(x, y))) return false;
        }
    }
    return true;
}

bool is_abelian(const ConcreteGroup& group, const Subgroup& subgroup) {
    for (const auto x : subgroup.members) {
        require_index(group, x);
        for (const auto y : subgroup.members) {
            if (!group.commute(x, y)) return false;
        }
    }
    return true;
}

Subgroup center(const ConcreteGroup& group) {
    Subgroup z;
    for (ElementIndex a = 0; a < group.order(); ++a) {
        if (group.centralizer_of(a).count() == group.order()) z.members.push_back(a);
    }
    return z;
}

std::int64_t element_order(const ConcreteGroup& group, ElementIndex g) {
    require_index(group, g);
    std::int64_t t = 1;
    for (ElementIndex x = g; x != group.identity(); x = group.mul(x, g)) ++t;
    return t;
}

std::map<std::int64_t, std::int64_t> order_sequence(const ConcreteGroup& group, std::int64_t cap) {
    require_order_at_most(group, cap, "order_sequence");
    std::map<std::int64_t, std::int64_t> census;
    for (ElementIndex g = 0; g < group.order(); ++g) ++census[element_order(group, g)];
    return census;
}

AbelianSearchResult abelian_search(const ConcreteGroup& group, std::int64_t cap) {
    require_order_at_most(group, cap, "abelian_search");
    const std::vector<ElementSet> seeds = center_seeds(group);
    SharedMemo memo;
    std::vector<Subgroup> maximal;
    const auto n_seeds = static_cast<std::int64_t>(seeds.size());

#pragma omp parallel
    {
        std::vector<Subgroup> local;
#pragma omp for schedule(dynamic, 1) nowait
        for (std::int64_t i = 0; i < n_seeds; ++i) {
            const ElementSet& seed = seeds[static_cast<std::size_t>(i)];
            if (memo.insert(seed)) grow(group, seed, centralizer(group, seed), memo, local);
        }
#pragma omp critical(theta_abelian_search_merge)
        maximal.insert(maximal.end(), local.begin(), local.end());
    }
    return finish(std::move(maximal), memo);
}

AbelianSearchResult abelian_search_serial(const ConcreteGroup& group, std::int64_t cap) {
    require_order_at_most(group, cap, "abelian_search");
    SharedMemo memo;
    std::vector<Subgroup> maximal;
    for (const ElementSet& seed : center_seeds(group)) {
        if (memo.insert(seed)) grow(group, seed, centralizer(group, seed), memo, maximal);
    }
    return finish(std::move(maximal), memo);
}

std::int64_t max_abelian_order(const ConcreteGroup& group, std::int64_t cap) {
    return static_cast<std::int64_t>(abelian_search(group, cap).max_order);
}

std::int64_t max_abelian_order_serial(const ConcreteGroup& group, std::int64_t cap) {
    return static_cast<std::int64_t>(abelian_search_serial(group, cap).max_order);
}

std::int64_t min_abelian_index(const ConcreteGroup& group, std::int64_t cap) {
    return static_cast<std::int64_t>(group.order()) / max_abelian_order(group, cap);
}

std::vector<Subgroup> enumerate_subgroups(const ConcreteGroup& group, std::int64_t cap) {
    require_order_at_most(group, cap, "enumerate_subgroups");
    struct Found {
        ElementSet members;
        std::vector<ElementIndex> generators;
    };
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<Found> found;
    found.push_back({closure_set(group, {}), {}});
    seen.insert(found.front().members);

    for (std::size_t head = 0; head < found.size(); ++head) {
        for (ElementIndex g = 0; g < group.order(); ++g) {
            if (found[head].members.contains(g)) continue;
            std::vector<ElementIndex> gens = found[head].generators;
            gens.push_back(g);
            ElementSet next = closure_set(group, gens);
            if (seen.insert(next).second) found.push_back({std::move(next), std::move(gens)});
        }
    }

    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (const auto& f : found) out.push_back(Subgroup::from_set(f.members));
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t associativity_failures(const ConcreteGroup& group) {
    const auto n = static_cast<std::int64_t>(group.order());
    std::int64_t bad = 0;
#pragma omp parallel for schedule(static) reduction(+ : bad)
    for (std::int64_t a = 0; a < n; ++a) bad += associativity_row(group, static_cast<ElementIndex>(a));
    return bad;
}

std::int64_t associativity_failures_serial(const ConcreteGroup& group) {
    std::int64_t bad = 0;
    for (ElementIndex a = 0; a < group.order(); ++a) bad += associativity_row(group, a);
    return bad;
}

}  // namespace theta
