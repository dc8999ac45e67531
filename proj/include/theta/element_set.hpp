#pragma once

// Dense bitset over element indices 0..n-1 of a concrete group, and the
// Subgroup value type built from it.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace theta {

using ElementIndex = std::uint32_t;

class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const noexcept { return universe_; }

    bool contains(ElementIndex i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void insert(ElementIndex i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (const auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    ElementSet& operator&=(const ElementSet& other) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
        return *this;
    }

    /// this \ other
    ElementSet minus(const ElementSet& other) const {
        ElementSet out(*this);
        for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~other.words_[w];
        return out;
    }

    bool is_subset_of(const ElementSet& other) const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] & ~other.words_[w]) return false;
        }
        return true;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                fn(static_cast<ElementIndex>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<ElementIndex> to_vector() const {
        std::vector<ElementIndex> out;
        out.reserve(count());
        for_each([&](ElementIndex i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (const auto w : words_) {
            h ^= w;
            h *= 1099511628211ull;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// A subgroup given by its sorted member indices.
struct Subgroup {
    std::vector<ElementIndex> members;

    std::size_t order() const noexcept { return members.size(); }
    bool contains(ElementIndex i) const {
        return std::binary_search(members.begin(), members.end(), i);
    }

    static Subgroup from_set(const ElementSet& set) { return Subgroup{set.to_vector()}; }
    ElementSet to_set(std::size_t universe) const {
        ElementSet s(universe);
        for (const auto i : members) s.insert(i);
        return s;
    }

    friend bool operator==(const Subgroup&, const Subgroup&) = default;
    friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

}  // namespace theta
