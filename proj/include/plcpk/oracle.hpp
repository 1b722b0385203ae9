#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "plcpk/alphabet.hpp"
#include "plcpk/plcp_result.hpp"

namespace plcpk {
namespace oracle {

/// k-mismatch common prefix length of two letter windows, by direct scan.
inline std::size_t lcp_k_hamming(std::span<const code_t> a, std::span<const code_t> b, int k) {
    std::size_t lim = std::min(a.size(), b.size());
    int errors = 0;
    for (std::size_t t = 0; t < lim; ++t) {
        if (a[t] != b[t] && ++errors > k) return t;
    }
    return lim;
}

/// O(n^2 k) reference: scan every ordered pair and count mismatches.
/// Shares nothing with the y-fast-trie path.
inline PlcpResult brute_plcp_hamming(const Text& text, int k) {
    const std::size_t n = text.size();
    PlcpResult res;
    res.model = Model::Hamming;
    res.k = k;
    res.plcp.assign(n, 0);
    res.p.assign(n, no_witness);
    std::span<const code_t> codes(text.codes);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::size_t len = lcp_k_hamming(codes.subspan(i), codes.subspan(j), k);
            if (res.p[i] == no_witness ||
                static_cast<std::int64_t>(len) > res.plcp[i]) {
                res.plcp[i] = static_cast<std::int64_t>(len);
                res.p[i] = static_cast<std::int64_t>(j);
            }
        }
    }
    return res;
}

/// Largest a such that a[0..a-1] is within edit distance k of some prefix
/// of b, by banded DP (band width 2k+1) with early exit once the whole
/// band row exceeds k.
inline std::size_t edit_lcp_banded(std::span<const code_t> a, std::span<const code_t> b, int k) {
    const std::int64_t A = static_cast<std::int64_t>(a.size());
    const std::int64_t B = static_cast<std::int64_t>(b.size());
    const int inf = k + 1;
    // row[d + k] = D(row a, col a + d)
    std::vector<int> row(2 * k + 1, inf), next(2 * k + 1, inf);
    for (std::int64_t d = 0; d <= k; ++d)
        if (d <= B) row[d + k] = static_cast<int>(d); // first row: D(0, b) = b
    std::size_t best = 0;
    for (std::int64_t ai = 1; ai <= A; ++ai) {
        bool alive = false;
        for (std::int64_t d = -k; d <= k; ++d) {
            std::int64_t bi = ai + d;
            int v = inf;
            if (bi >= 0 && bi <= B) {
                if (bi == 0) {
                    v = static_cast<int>(ai) > k ? inf : static_cast<int>(ai);
                } else {
                    int sub = row[d + k] == inf
                                  ? inf
                                  : row[d + k] + (a[ai - 1] == b[bi - 1] ? 0 : 1);
                    int del = row[d + 1 + k] == inf || d == k ? inf : row[d + 1 + k] + 1;
                    int ins = next[d - 1 + k] == inf || d == -k ? inf : next[d - 1 + k] + 1;
                    v = std::min({sub, del, ins});
                }
            }
            next[d + k] = std::min(v, inf);
            if (next[d + k] <= k) alive = true;
        }
        row.swap(next);
        std::fill(next.begin(), next.end(), inf);
        if (!alive) break;
        best = static_cast<std::size_t>(ai);
    }
    return best;
}

/// Full O(|a||b|) DP variant, used to cross-check the banded one.
inline std::size_t edit_lcp_full(std::span<const code_t> a, std::span<const code_t> b, int k) {
    const std::size_t A = a.size(), B = b.size();
    std::vector<int> row(B + 1), next(B + 1);
    for (std::size_t bi = 0; bi <= B; ++bi) row[bi] = static_cast<int>(bi);
    std::size_t best = 0;
    for (std::size_t ai = 1; ai <= A; ++ai) {
        next[0] = static_cast<int>(ai);
        int row_min = next[0];
        for (std::size_t bi = 1; bi <= B; ++bi) {
            int sub = row[bi - 1] + (a[ai - 1] == b[bi - 1] ? 0 : 1);
            next[bi] = std::min({sub, row[bi] + 1, next[bi - 1] + 1});
            row_min = std::min(row_min, next[bi]);
        }
        row.swap(next);
        if (row_min > k) break;
        best = ai;
    }
    return best;
}

/// Reference for the edit model with the S_{i,k} = {i-k,...,i+k} exclusion.
inline PlcpResult brute_plcp_edit(const Text& text, int k) {
    const std::size_t n = text.size();
    PlcpResult res;
    res.model = Model::Edit;
    res.k = k;
    res.plcp.assign(n, 0);
    res.p.assign(n, no_witness);
    std::span<const code_t> codes(text.codes);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t diff = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i);
            if (std::llabs(diff) <= k) continue; // j in S_{i,k}
            std::size_t len = edit_lcp_banded(codes.subspan(i), codes.subspan(j), k);
            if (res.p[i] == no_witness ||
                static_cast<std::int64_t>(len) > res.plcp[i]) {
                res.plcp[i] = static_cast<std::int64_t>(len);
                res.p[i] = static_cast<std::int64_t>(j);
            }
        }
    }
    return res;
}

/// Definitional evaluation of Lambda_{x,y} in O(|x||y|k) time.
inline std::vector<std::int64_t> brute_lambda(const Text& x, const Text& y, int k, Model model) {
    std::vector<std::int64_t> lam(x.size(), 0);
    std::span<const code_t> xs(x.codes), ys(y.codes);
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::size_t best = 0;
        for (std::size_t j = 0; j < y.size(); ++j) {
            std::size_t len = model == Model::Hamming
                                  ? lcp_k_hamming(xs.subspan(i), ys.subspan(j), k)
                                  : edit_lcp_banded(xs.subspan(i), ys.subspan(j), k);
            best = std::max(best, len);
        }
        lam[i] = static_cast<std::int64_t>(best);
    }
    return lam;
}

/// Banded edit distance of two equal-length windows; returns k+1 when the
/// distance exceeds k.
inline int edit_distance_banded(std::span<const code_t> a, std::span<const code_t> b, int k) {
    const std::int64_t L = static_cast<std::int64_t>(a.size());
    const int inf = k + 1;
    std::vector<int> row(2 * k + 1, inf), next(2 * k + 1, inf);
    for (std::int64_t d = 0; d <= k; ++d)
        if (d <= L) row[d + k] = static_cast<int>(d);
    if (L == 0) return 0;
    for (std::int64_t ai = 1; ai <= L; ++ai) {
        for (std::int64_t d = -k; d <= k; ++d) {
            std::int64_t bi = ai + d;
            int v = inf;
            if (bi >= 0 && bi <= L) {
                if (bi == 0) {
                    v = static_cast<int>(ai) > k ? inf : static_cast<int>(ai);
                } else {
                    int sub = row[d + k] == inf
                                  ? inf
                                  : row[d + k] + (a[ai - 1] == b[bi - 1] ? 0 : 1);
                    int del = row[d + 1 + k] == inf || d == k ? inf : row[d + 1 + k] + 1;
                    int ins = next[d - 1 + k] == inf || d == -k ? inf : next[d - 1 + k] + 1;
                    v = std::min({sub, del, ins});
                }
            }
            next[d + k] = std::min(v, inf);
        }
        row.swap(next);
        std::fill(next.begin(), next.end(), inf);
    }
    return row[k]; // main diagonal: D(L, L)
}

/// Maximal suffix/prefix overlap of s against t: the longest len such that
/// the length-len suffix of s and length-len prefix of t are within
/// distance k; len is capped at min(|s|, |t|).
inline std::size_t brute_overlap(const Text& s, const Text& t, int k, Model model) {
    std::span<const code_t> ss(s.codes), ts(t.codes);
    std::size_t cap = std::min(s.size(), t.size());
    for (std::size_t len = cap; len >= 1; --len) {
        std::span<const code_t> suffix = ss.subspan(s.size() - len);
        bool ok;
        if (model == Model::Hamming) {
            int errors = 0;
            for (std::size_t q = 0; q < len; ++q) errors += suffix[q] != ts[q];
            ok = errors <= k;
        } else {
            ok = edit_distance_banded(suffix, ts.first(len), k) <= k;
        }
        if (ok) return len;
    }
    return 0;
}

} // namespace oracle
} // namespace plcpk
