#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "plcpk/suffix_index.hpp"

namespace plcpk {

/// lce clipped to the half-open windows [i, i_end) and [j, j_end).
inline std::size_t lce_bounded(const SuffixIndex& idx, std::size_t i, std::size_t j,
                               std::size_t i_end, std::size_t j_end) {
    std::size_t cap = std::min(i_end - i, j_end - j);
    if (cap == 0) return 0;
    return std::min(idx.lce(i, j), cap);
}

/// Kangaroo extension: k-mismatch common prefix length of the windows
/// starting at i and j, via at most k+1 LCE queries.
inline std::size_t hamming_extend(const SuffixIndex& idx, std::size_t i, std::size_t j, int k,
                                  std::size_t i_end, std::size_t j_end) {
    std::size_t cap = std::min(i_end - i, j_end - j);
    std::size_t len = 0;
    int budget = k;
    while (true) {
        if (len >= cap) return cap;
        len += lce_bounded(idx, i + len, j + len, i_end, j_end);
        if (len >= cap) return cap;
        if (budget == 0) return len;
        --budget;
        ++len; // pay one substitution for the mismatch
    }
}

inline std::size_t hamming_extend(const SuffixIndex& idx, std::size_t i, std::size_t j, int k) {
    return hamming_extend(idx, i, j, k, idx.size(), idx.size());
}

/// Landau-Vishkin extension: the largest a such that x[i..i+a-1] is within
/// edit distance k of some prefix of the window at j. 2k+1 diagonals, k
/// farthest-reach rounds, O(k^2) LCE queries. Lengths are measured on the
/// i-side (rows).
inline std::size_t lv_extend(const SuffixIndex& idx, std::size_t i, std::size_t j, int k,
                             std::size_t i_end, std::size_t j_end) {
    const std::size_t A = i_end - i; // row limit (i-side)
    const std::size_t B = j_end - j; // column limit (j-side)
    constexpr std::int64_t unreached = -1;

    // reach[d + k] = farthest row a on diagonal d (= b - a) with <= e errors
    std::vector<std::int64_t> reach(2 * k + 1, unreached), next(2 * k + 1);
    auto slide = [&](std::int64_t a, int d) -> std::int64_t {
        // clamp into the matrix, then extend along matching letters
        if (a < 0) return unreached;
        std::int64_t b = a + d;
        if (b < 0 || b > static_cast<std::int64_t>(B) || a > static_cast<std::int64_t>(A))
            return unreached;
        std::size_t au = static_cast<std::size_t>(a);
        std::size_t bu = static_cast<std::size_t>(b);
        if (au < A && bu < B) au += lce_bounded(idx, i + au, j + bu, i_end, j_end);
        return static_cast<std::int64_t>(au);
    };

    reach[k] = slide(0, 0);
    std::int64_t best = reach[k];
    for (int e = 1; e <= k; ++e) {
        for (int d = -k; d <= k; ++d) {
            std::int64_t cand = reach[d + k]; // keep the <= e-1 errors reach
            if (reach[d + k] != unreached)    // substitution
                cand = std::max(cand, slide(reach[d + k] + 1, d));
            if (d > -k && reach[d - 1 + k] != unreached) // insertion on the j-side
                cand = std::max(cand, slide(reach[d - 1 + k], d));
            if (d < k && reach[d + 1 + k] != unreached) // deletion of an i-side letter
                cand = std::max(cand, slide(reach[d + 1 + k] + 1, d));
            next[d + k] = cand;
            best = std::max(best, cand);
        }
        reach.swap(next);
    }
    return best <= 0 ? 0 : static_cast<std::size_t>(best);
}

inline std::size_t lv_extend(const SuffixIndex& idx, std::size_t i, std::size_t j, int k) {
    return lv_extend(idx, i, j, k, idx.size(), idx.size());
}

/// True iff the equal-length windows x[i..i+len) and x[j..j+len) are within
/// edit distance k: farthest reach on the main diagonal must touch row len.
inline bool lv_within(const SuffixIndex& idx, std::size_t i, std::size_t j, std::size_t len,
                      int k) {
    const std::size_t i_end = i + len, j_end = j + len;
    constexpr std::int64_t unreached = -1;
    std::vector<std::int64_t> reach(2 * k + 1, unreached), next(2 * k + 1);
    auto slide = [&](std::int64_t a, int d) -> std::int64_t {
        if (a < 0) return unreached;
        std::int64_t b = a + d;
        if (b < 0 || b > static_cast<std::int64_t>(len) || a > static_cast<std::int64_t>(len))
            return unreached;
        std::size_t au = static_cast<std::size_t>(a);
        if (au < len && static_cast<std::size_t>(b) < len)
            au += lce_bounded(idx, i + au, j + static_cast<std::size_t>(b), i_end, j_end);
        return static_cast<std::int64_t>(au);
    };
    reach[k] = slide(0, 0);
    for (int e = 1; e <= k; ++e) {
        for (int d = -k; d <= k; ++d) {
            std::int64_t cand = reach[d + k];
            if (reach[d + k] != unreached) cand = std::max(cand, slide(reach[d + k] + 1, d));
            if (d > -k && reach[d - 1 + k] != unreached)
                cand = std::max(cand, slide(reach[d - 1 + k], d));
            if (d < k && reach[d + 1 + k] != unreached)
                cand = std::max(cand, slide(reach[d + 1 + k] + 1, d));
            next[d + k] = cand;
        }
        reach.swap(next);
    }
    return reach[k] >= static_cast<std::int64_t>(len);
}

} // namespace plcpk
