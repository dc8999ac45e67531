#pragma once

// Test-only oracles. None of these call into the library's arithmetic: they
// use complex exponentials, exhaustive search or naive set sweeps so the
// library can be checked against them.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline const double kTwoPi = 2.0 * std::acos(-1.0);

inline cplx root(std::int64_t numerator, std::int64_t denominator) {
    return std::polar(1.0, kTwoPi * static_cast<double>(numerator) / static_cast<double>(denominator));
}

/// l(k) = prod_i exp(2 pi i c_i x_i / d_i)
inline cplx character_value(const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& c,
                            const std::vector<std::int64_t>& x) {
    cplx v{1.0, 0.0};
    for (std::size_t i = 0; i < d.size(); ++i) v *= root(c[i] * x[i], d[i]);
    return v;
}

/// Exponent e in [0, m) with exp(2 pi i e / m) closest to z.
inline std::int64_t exponent_of(cplx z, std::int64_t m) {
    double turns = std::arg(z) / kTwoPi;
    if (turns < 0) turns += 1.0;
    return static_cast<std::int64_t>(std::llround(turns * static_cast<double>(m))) % m;
}

/// Theta group over K = prod Z_{d_i} with a stored as a unit complex number
/// and the cocycle l'(k) evaluated through complex exponentials.
struct ComplexTheta {
    std::vector<std::int64_t> d;
    std::int64_t m;

    struct Elem {
        cplx a;
        std::vector<std::int64_t> k, l;
    };

    Elem mul(const Elem& g, const Elem& h) const {
        Elem out{g.a * h.a * character_value(d, h.l, g.k), g.k, g.l};
        for (std::size_t i = 0; i < d.size(); ++i) {
            out.k[i] = (g.k[i] + h.k[i]) % d[i];
            out.l[i] = (g.l[i] + h.l[i]) % d[i];
        }
        return out;
    }
};

/// Does some bijection f: A -> B satisfy f(x+y) = f(x)+f(y)? Tables are
/// Cayley tables on 0..n-1. Exhaustive over permutations (n <= 8).
inline bool isomorphic_by_search(const std::vector<std::vector<int>>& a,
                                 const std::vector<std::vector<int>>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) return false;
    std::vector<int> f(n);
    std::iota(f.begin(), f.end(), 0);
    do {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
            for (std::size_t y = 0; y < n && ok; ++y) ok = f[a[x][y]] == b[f[x]][f[y]];
        }
        if (ok) return true;
    } while (std::next_permutation(f.begin(), f.end()));
    return false;
}

/// Cayley table of prod Z_{d_i} with lexicographic numbering.
inline std::vector<std::vector<int>> product_table(const std::vector<int>& d) {
    int n = 1;
    for (int x : d) n *= x;
    auto decode = [&](int idx) {
        std::vector<int> c(d.size());
        for (std::size_t i = d.size(); i-- > 0;) {
            c[i] = idx % d[i];
            idx /= d[i];
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int idx = 0;
        for (std::size_t i = 0; i < d.size(); ++i) idx = idx * d[i] + c[i];
        return idx;
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            auto cx = decode(x), cy = decode(y);
            for (std::size_t i = 0; i < d.size(); ++i) cx[i] = (cx[i] + cy[i]) % d[i];
            t[x][y] = encode(cx);
        }
    }
    return t;
}

/// A group given only by a multiplication function on 0..n-1 and identity.
struct NaiveGroup {
    int n;
    int e;
    std::function<int(int, int)> mul;

    std::set<int> close(std::vector<int> gens) const {
        std::set<int> s{e};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(s.begin(), s.end());
            for (int x : cur) {
                for (int g : gens) {
                    if (s.insert(mul(x, g)).second) grew = true;
                }
            }
        }
        return s;
    }

    bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }

    bool abelian(const std::set<int>& s) const {
        for (int x : s) {
            for (int y : s) {
                if (!commute(x, y)) return false;
            }
        }
        return true;
    }

    int order_of(int g) const {
        int t = 1;
        for (int x = g; x != e; x = mul(x, g)) ++t;
        return t;
    }
};

/// Close every subset of at most three elements; for each abelian closure
/// adjoin commuting elements greedily (in index order) until maximal.
inline int max_abelian_by_subset_sweep(const NaiveGroup& g) {
    int best = 1;
    auto extend = [&](std::set<int> s) {
        std::vector<int> gens(s.begin(), s.end());
        for (int x = 0; x < g.n; ++x) {
            if (s.count(x)) continue;
            bool ok = std::all_of(s.begin(), s.end(), [&](int y) { return g.commute(x, y); });
            if (!ok) continue;
            gens.push_back(x);
            s = g.close(gens);
        }
        return static_cast<int>(s.size());
    };
    for (int a = 0; a < g.n; ++a) {
        for (int b = a; b < g.n; ++b) {
            if (!g.commute(a, b)) continue;
            for (int c = b; c < g.n; ++c) {
                if (!g.commute(a, c) || !g.commute(b, c)) continue;
                const auto s = g.close({a, b, c});
                if (!g.abelian(s)) continue;
                best = std::max(best, extend(s));
            }
        }
    }
    return best;
}

/// Largest subset of an additive group (given by `add` on 0..n-1, zero = 0)
/// that is closed under addition and on which `pair` vanishes. Exhaustive
/// over all subsets containing 0; n <= 16.
inline int max_isotropic_by_subsets(int n, const std::function<int(int, int)>& add,
                                    const std::function<bool(int, int)>& pair_vanishes) {
    int best = 1;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        const std::uint32_t set = (mask << 1) | 1u;
        const int size = std::popcount(set);
        if (size <= best) continue;
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            if (!(set >> x & 1u)) continue;
            for (int y = 0; y < n && ok; ++y) {
                if (!(set >> y & 1u)) continue;
                ok = (set >> add(x, y) & 1u) && pair_vanishes(x, y);
            }
        }
        if (ok) best = size;
    }
    return best;
}

}  // namespace oracle
