#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "plcpk/alphabet.hpp"
#include "plcpk/plcp_result.hpp"

namespace plcpk {

/// Sparse-table range minimum over a fixed array; O(1) per query.
class RangeMin {
public:
    RangeMin() = default;

    explicit RangeMin(const std::vector<std::int32_t>& a) {
        n_ = a.size();
        if (n_ == 0) return;
        levels_ = std::bit_width(n_);
        table_.resize(levels_);
        table_[0] = a;
        for (std::size_t l = 1; l < levels_; ++l) {
            std::size_t span = std::size_t{1} << l;
            table_[l].resize(n_ - span + 1);
            for (std::size_t i = 0; i + span <= n_; ++i)
                table_[l][i] = std::min(table_[l - 1][i], table_[l - 1][i + span / 2]);
        }
    }

    /// Minimum over the inclusive range [lo, hi].
    std::int32_t min(std::size_t lo, std::size_t hi) const {
        std::size_t l = std::bit_width(hi - lo + 1) - 1;
        return std::min(table_[l][lo], table_[l][hi - (std::size_t{1} << l) + 1]);
    }

private:
    std::size_t n_ = 0;
    std::size_t levels_ = 0;
    std::vector<std::vector<std::int32_t>> table_;
};

/// SA + iSA + LCP + RMQ bundle; immutable after construction and
/// safe for concurrent queries.
class SuffixIndex {
public:
    std::vector<std::int32_t> sa;
    std::vector<std::int32_t> isa;
    std::vector<std::int32_t> lcp; // lcp[r] = lcp(r-1, r), lcp[0] = 0
    RangeMin rmq;
    std::vector<code_t> codes; // copy of the text, for the short-match path

    std::size_t size() const { return sa.size(); }

    /// Longest common prefix length of the suffixes starting at i and j.
    /// Short agreements (the common case on random text) are resolved by
    /// direct word comparison; long ones by RMQ over the LCP array.
    std::size_t lce(std::size_t i, std::size_t j) const {
        const std::size_t n = sa.size();
        if (i >= n || j >= n) throw std::out_of_range("lce: position out of range");
        if (i == j) return n - i;
        const std::size_t lim = n - std::max(i, j);
        std::size_t l = 0;
        while (l < lim && l < 16) {
            std::uint64_t a = 0, b = 0;
            std::size_t chunk = std::min<std::size_t>(8, lim - l);
            std::memcpy(&a, codes.data() + i + l, chunk);
            std::memcpy(&b, codes.data() + j + l, chunk);
            if (a != b) return l + static_cast<std::size_t>(std::countr_zero(a ^ b)) / 8;
            l += chunk;
        }
        if (l >= lim) return lim;
        std::size_t ri = isa[i], rj = isa[j];
        if (ri > rj) std::swap(ri, rj);
        return static_cast<std::size_t>(rmq.min(ri + 1, rj));
    }
};

/// Prefix-doubling suffix array construction, O(n log n) with radix passes,
/// followed by Kasai's LCP algorithm.
inline SuffixIndex build_index(const Text& text) {
    const std::size_t n = text.size();
    if (n == 0) throw input_error("build_index: empty text");

    SuffixIndex idx;
    idx.sa.resize(n);
    idx.isa.resize(n);
    std::vector<std::int32_t>& sa = idx.sa;
    std::vector<std::int32_t> rank(n), tmp(n), cnt;

    std::iota(sa.begin(), sa.end(), 0);
    for (std::size_t i = 0; i < n; ++i) rank[i] = text.codes[i];

    auto radix_pass = [&](const std::vector<std::int32_t>& keys,
                          const std::vector<std::int32_t>& in,
                          std::vector<std::int32_t>& out, std::int32_t max_key) {
        cnt.assign(static_cast<std::size_t>(max_key) + 2, 0);
        for (std::size_t i = 0; i < n; ++i) ++cnt[keys[in[i]] + 1];
        for (std::size_t k = 1; k < cnt.size(); ++k) cnt[k] += cnt[k - 1];
        for (std::size_t i = 0; i < n; ++i) out[cnt[keys[in[i]]]++] = in[i];
    };

    std::vector<std::int32_t> second(n), order2(n), new_rank(n);
    for (std::size_t h = 1;; h <<= 1) {
        std::int32_t max_rank = *std::max_element(rank.begin(), rank.end());
        for (std::size_t i = 0; i < n; ++i)
            second[i] = i + h < n ? rank[i + h] + 1 : 0;
        // stable two-pass radix: by second key, then by rank
        radix_pass(second, sa, order2, max_rank + 1);
        radix_pass(rank, order2, tmp, max_rank);
        sa.swap(tmp);

        new_rank[sa[0]] = 0;
        bool all_distinct = true;
        for (std::size_t r = 1; r < n; ++r) {
            bool same = rank[sa[r]] == rank[sa[r - 1]] && second[sa[r]] == second[sa[r - 1]];
            new_rank[sa[r]] = new_rank[sa[r - 1]] + (same ? 0 : 1);
            all_distinct = all_distinct && !same;
        }
        rank.swap(new_rank);
        if (all_distinct || h >= n) break;
    }

    for (std::size_t r = 0; r < n; ++r) idx.isa[sa[r]] = static_cast<std::int32_t>(r);

    // Kasai
    idx.lcp.assign(n, 0);
    std::size_t l = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = static_cast<std::size_t>(idx.isa[i]);
        if (r == 0) {
            l = 0;
            continue;
        }
        std::size_t j = static_cast<std::size_t>(sa[r - 1]);
        while (i + l < n && j + l < n && text.codes[i + l] == text.codes[j + l]) ++l;
        idx.lcp[r] = static_cast<std::int32_t>(l);
        if (l > 0) --l;
    }

    idx.rmq = RangeMin(idx.lcp);
    idx.codes = text.codes;
    return idx;
}

/// PLCP_0 / P_0: best zero-error prefix match against either SA neighbor,
/// ties broken toward the lexicographic predecessor.
inline PlcpResult plcp0_init(const SuffixIndex& idx) {
    const std::size_t n = idx.size();
    PlcpResult res;
    res.model = Model::Hamming;
    res.k = 0;
    res.plcp.assign(n, 0);
    res.p.assign(n, no_witness);
    if (n == 1) return res;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = static_cast<std::size_t>(idx.isa[i]);
        std::int32_t up = r > 0 ? idx.lcp[r] : -1;
        std::int32_t down = r + 1 < n ? idx.lcp[r + 1] : -1;
        if (up >= down) {
            res.plcp[i] = up;
            res.p[i] = idx.sa[r - 1];
        } else {
            res.plcp[i] = down;
            res.p[i] = idx.sa[r + 1];
        }
    }
    return res;
}

/// Scan outward from isa[j] in SA order past excluded entries; returns the
/// position f_j outside `excluded` maximizing lce(j, f_j), or (-1, 0) when
/// every position is excluded. `excluded` must contain j.
template <typename ExcludedPred>
inline std::pair<std::int64_t, std::size_t>
best_neighbor_outside(const SuffixIndex& idx, std::size_t j, ExcludedPred excluded) {
    const std::size_t n = idx.size();
    const std::size_t rj = static_cast<std::size_t>(idx.isa[j]);

    std::int64_t best_pos = no_witness;
    std::size_t best_len = 0;
    bool found = false;

    // predecessor side first so that ties favour it
    std::int32_t run = std::numeric_limits<std::int32_t>::max();
    for (std::size_t r = rj; r > 0;) {
        run = std::min(run, idx.lcp[r]);
        --r;
        if (!excluded(static_cast<std::size_t>(idx.sa[r]))) {
            best_pos = idx.sa[r];
            best_len = static_cast<std::size_t>(run);
            found = true;
            break;
        }
    }
    run = std::numeric_limits<std::int32_t>::max();
    for (std::size_t r = rj + 1; r < n; ++r) {
        run = std::min(run, idx.lcp[r]);
        if (!excluded(static_cast<std::size_t>(idx.sa[r]))) {
            if (!found || static_cast<std::size_t>(run) > best_len) {
                best_pos = idx.sa[r];
                best_len = static_cast<std::size_t>(run);
            }
            break;
        }
    }
    return {best_pos, best_pos == no_witness ? 0 : best_len};
}

} // namespace plcpk
