#ifndef EDT_BITS_HPP
#define EDT_BITS_HPP

// Small helpers for vertex subsets stored as 64-bit masks. Every exhaustive
// routine in the library works on graphs with at most 64 vertices.

#include <bit>
#include <cstdint>
#include <type_traits>
#include <vector>

namespace edt {

using Mask = std::uint64_t;

inline constexpr int kMaxMaskVertices = 64;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr int lowest(Mask m) { return std::countr_zero(m); }

constexpr bool contains(Mask m, int v) { return (m >> v) & 1U; }

inline std::vector<int> mask_to_vertices(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    while (m) {
        out.push_back(lowest(m));
        m &= m - 1;
    }
    return out;
}

template <typename Range>
Mask vertices_to_mask(const Range& vs) {
    Mask m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

/// Calls fn(v) for every set bit, ascending.
template <typename Fn>
void for_each_bit(Mask m, Fn&& fn) {
    while (m) {
        fn(lowest(m));
        m &= m - 1;
    }
}

/// Lexicographic order on the sorted vertex lists of two sets.
constexpr bool lex_less(Mask a, Mask b) {
    if (a == b) return false;
    const Mask diff = a ^ b;
    const int x = lowest(diff);
    const Mask above = ~full_mask(x + 1);
    if (contains(a, x)) {
        // a continues with x; b continues with something larger or stops
        return (b & above) != 0;
    }
    return (a & above) == 0;
}

/// Visits all k-subsets of {0..n-1} in lexicographic order of their sorted
/// vertex lists. fn returns void, or bool where false stops the walk.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        Mask m = 0;
        for (int v : idx) m |= bit(v);
        if constexpr (std::is_same_v<decltype(fn(m)), bool>) {
            if (!fn(m)) return;
        } else {
            fn(m);
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Visits all k-subsets of the given mask (order unspecified).
template <typename Fn>
void for_each_subset_of_size(Mask universe, int k, Fn&& fn) {
    const std::vector<int> members = mask_to_vertices(universe);
    const int m = static_cast<int>(members.size());
    for_each_combination(m, k, [&](Mask local) {
        Mask out = 0;
        for_each_bit(local, [&](int i) { out |= bit(members[i]); });
        fn(out);
    });
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = k < n - k ? k : n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace edt

#endif
