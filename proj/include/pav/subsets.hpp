#pragma once

#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "pav/element_set.hpp"

namespace pav {

/// C(n, k) as a 64-bit count; exact for every n <= 64 (the largest value,
/// C(64,32), still fits). Saturates to UINT64_MAX beyond that.
inline std::uint64_t subset_count(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (c > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(c);
}

/// Visit every k-subset of {1..n} in lexicographic order of the ascending
/// element sequences. The visitor may return void, or bool where false
/// stops the enumeration early.
template <typename F>
void for_each_subset(int n, int k, F&& visit) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        (void)visit(ElementSet::empty_set(n));
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        std::uint64_t bits = 0;
        for (int e : idx) bits |= std::uint64_t{1} << (e - 1);
        ElementSet s = ElementSet::from_bits(n, bits);
        if constexpr (std::is_same_v<decltype(visit(s)), bool>) {
            if (!visit(s)) return;
        } else {
            visit(s);
        }
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// All k-subsets, lex order, materialized.
inline std::vector<ElementSet> subsets_of_size(int n, int k) {
    std::vector<ElementSet> out;
    out.reserve(static_cast<std::size_t>(subset_count(n, k)));
    for_each_subset(n, k, [&](const ElementSet& s) { out.push_back(s); });
    return out;
}

}  // namespace pav
