#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "plcpk/config.hpp"
#include "plcpk/detail/parallel.hpp"
#include "plcpk/detail/search_engine.hpp"
#include "plcpk/extend.hpp"
#include "plcpk/gram_set.hpp"
#include "plcpk/plcp_result.hpp"
#include "plcpk/suffix_index.hpp"

namespace plcpk {

/// Kangaroo-extends every SA-consecutive pair of suffixes sharing a prefix
/// of at least lambda, updating both endpoints.
inline void long_pairs_pass(const Text& text, const SuffixIndex& idx, const Config& cfg,
                            PlcpResult& result) {
    (void)text;
    const std::size_t n = idx.size();
    for (std::size_t r = 1; r < n; ++r) {
        if (static_cast<std::size_t>(idx.lcp[r]) < cfg.lambda) continue;
        std::size_t i = static_cast<std::size_t>(idx.sa[r - 1]);
        std::size_t j = static_cast<std::size_t>(idx.sa[r]);
        std::size_t len = hamming_extend(idx, i, j, cfg.k);
        result.improve(i, static_cast<std::int64_t>(len), static_cast<std::int64_t>(j));
        result.improve(j, static_cast<std::int64_t>(len), static_cast<std::int64_t>(i));
    }
}

/// Single trie probe for an edited gram z: exact hit scores the whole SA
/// interval by kangaroo extension; a miss takes the better of the strict
/// predecessor/successor by xor_lcp. Witnesses equal to i are skipped.
inline std::pair<std::size_t, std::int64_t>
query_best_neighbor(const PackedGram& z, std::size_t i, const GramSet& set,
                    const SuffixIndex& idx, int k) {
    std::size_t best_len = 0;
    std::int64_t best_pos = no_witness;
    if (auto e = set.find_exact(z)) {
        for (std::size_t m = 0, cnt = set.member_count(*e); m < cnt; ++m) {
            std::size_t t = set.member_position(*e, m);
            if (t == i) continue;
            std::size_t len = hamming_extend(idx, i, t, k);
            if (best_pos == no_witness || len > best_len) {
                best_len = len;
                best_pos = static_cast<std::int64_t>(t);
            }
        }
        if (best_pos != no_witness) return {best_len, best_pos};
    }
    for (auto side : {set.find_pred(z), set.find_succ(z)}) {
        if (!side) continue;
        std::size_t ag = set.codec().xor_lcp(z, set.entry(*side).key);
        ag = std::min<std::size_t>(ag, z.len);
        std::size_t t = set.member_position(*side, 0);
        if (t == i) continue;
        if (best_pos == no_witness || ag > best_len) {
            best_len = ag;
            best_pos = static_cast<std::int64_t>(t);
        }
    }
    return {best_len, best_pos};
}

namespace detail {

inline std::vector<std::size_t> whole_text_regions(std::size_t n) {
    return std::vector<std::size_t>(n, n);
}

inline SearchEngine::Hooks plcp_hamming_hooks(std::size_t i, PlcpResult& result) {
    SearchEngine::Hooks hooks;
    hooks.excluded = [i](std::size_t t) { return t == i; };
    hooks.candidate = [i, &result](std::size_t witness, std::size_t score) {
        result.improve(i, static_cast<std::int64_t>(score), static_cast<std::int64_t>(witness));
    };
    hooks.max_excluded = 1;
    return hooks;
}

} // namespace detail

/// Depth-first substitution enumeration for one position, per the window
/// rule: after an error at offset j_e with current match bound m, the next
/// error goes to an offset in (j_e, m]. Every candidate is rescored by an
/// exact kangaroo extension, so updates are always attained values.
inline void enumerate_errors(const Text& text, std::size_t i, const Config& cfg,
                             const GramSet& set, const SuffixIndex& idx, PlcpResult& result) {
    auto pos_end = detail::whole_text_regions(idx.size());
    detail::SearchEngine engine(text, idx, set, Model::Hamming, cfg.k,
                                static_cast<unsigned>(text.alphabet.sigma()), pos_end);
    auto hooks = detail::plcp_hamming_hooks(i, result);
    engine.process(i, hooks);
}

/// PLCP_k / P_k under Hamming distance: zero-error initialization, the
/// long-pair kangaroo pass, then the per-position enumeration over the
/// lambda-gram set. The enumeration pass is data-parallel over positions.
inline PlcpResult compute_plcp_hamming(const Text& text, const Config& cfg,
                                       unsigned threads = 1) {
    SuffixIndex idx = build_index(text);
    PlcpResult result = plcp0_init(idx);
    result.model = Model::Hamming;
    result.k = cfg.k;
    const std::size_t n = idx.size();
    if (cfg.k == 0 || n == 1) return result;

    long_pairs_pass(text, idx, cfg, result);
    GramSet set = build_gram_set(text, idx, cfg.lambda);
    auto pos_end = detail::whole_text_regions(n);
    const unsigned sigma = static_cast<unsigned>(text.alphabet.sigma());

    // positions are visited in SA order: edited grams of neighbouring
    // suffixes probe neighbouring parts of the set, which keeps the hot
    // structures cache-resident
    detail::parallel_chunks(n, threads, [&](std::size_t lo, std::size_t hi) {
        detail::SearchEngine engine(text, idx, set, Model::Hamming, cfg.k, sigma, pos_end);
        for (std::size_t r = lo; r < hi; ++r) {
            std::size_t i = static_cast<std::size_t>(idx.sa[r]);
            auto hooks = detail::plcp_hamming_hooks(i, result);
            engine.process(i, hooks);
        }
    });
    return result;
}

} // namespace plcpk
