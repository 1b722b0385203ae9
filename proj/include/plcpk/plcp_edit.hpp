#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "plcpk/config.hpp"
#include "plcpk/detail/parallel.hpp"
#include "plcpk/detail/search_engine.hpp"
#include "plcpk/extend.hpp"
#include "plcpk/gram_set.hpp"
#include "plcpk/plcp_result.hpp"
#include "plcpk/suffix_index.hpp"

namespace plcpk {

/// Replacement witnesses for the excluded window S_{i,k} = {i-k,...,i+k}:
/// f_j is the position outside the window with the longest common prefix
/// with the suffix at j (-1 when the window covers the whole text).
struct ExclusionTable {
    std::size_t lo = 0; // window start
    std::vector<std::int64_t> f;

    ExclusionTable(const SuffixIndex& idx, std::size_t i, int k) {
        const std::size_t n = idx.size();
        lo = i >= static_cast<std::size_t>(k) ? i - static_cast<std::size_t>(k) : 0;
        std::size_t hi = std::min(n - 1, i + static_cast<std::size_t>(k));
        auto in_window = [&](std::size_t p) { return p >= lo && p <= hi; };
        f.reserve(hi - lo + 1);
        for (std::size_t j = lo; j <= hi; ++j)
            f.push_back(best_neighbor_outside(idx, j, in_window).first);
    }

    bool contains(std::size_t p) const { return p >= lo && p < lo + f.size(); }
    std::int64_t replacement(std::size_t p) const { return f[p - lo]; }
};

namespace detail {

inline SearchEngine::Hooks plcp_edit_hooks(std::size_t i, const ExclusionTable& table,
                                           int k, PlcpResult& result) {
    SearchEngine::Hooks hooks;
    hooks.excluded = [&table](std::size_t t) { return table.contains(t); };
    hooks.f_replacement = [&table](std::size_t t) { return table.replacement(t); };
    hooks.candidate = [i, &result](std::size_t witness, std::size_t score) {
        result.improve(i, static_cast<std::int64_t>(score), static_cast<std::int64_t>(witness));
    };
    hooks.max_excluded = 2 * static_cast<std::size_t>(k) + 1;
    return hooks;
}

} // namespace detail

/// Edit-model enumeration for one position: substitutions, insertions and
/// deletions applied to the gram, trie probes as in the Hamming pass, and
/// witnesses landing in S_{i,k} rerouted through the exclusion table.
inline void enumerate_errors_edit(const Text& text, std::size_t i, const Config& cfg,
                                  const GramSet& set, const SuffixIndex& idx,
                                  PlcpResult& result) {
    auto pos_end = detail::whole_text_regions(idx.size());
    detail::SearchEngine engine(text, idx, set, Model::Edit, cfg.k,
                                static_cast<unsigned>(text.alphabet.sigma()), pos_end);
    ExclusionTable table(idx, i, cfg.k);
    if (result.p[i] == no_witness && table.contains(i))
        result.p[i] = table.replacement(i); // zero-length witness when one exists
    auto hooks = detail::plcp_edit_hooks(i, table, cfg.k, result);
    engine.process(i, hooks);
}

/// PLCP_k / P_k under edit distance with the S_{i,k} positional exclusion.
/// Candidates are rescored by the exact Landau-Vishkin extension.
inline PlcpResult compute_plcp_edit(const Text& text, const Config& cfg,
                                    unsigned threads = 1) {
    SuffixIndex idx = build_index(text);
    const std::size_t n = idx.size();
    PlcpResult result;
    result.model = Model::Edit;
    result.k = cfg.k;
    result.plcp.assign(n, 0);
    result.p.assign(n, no_witness);
    if (cfg.k == 0) {
        PlcpResult zero = plcp0_init(idx);
        result.plcp = std::move(zero.plcp);
        result.p = std::move(zero.p);
        return result;
    }
    // long pairs: SA-consecutive suffixes sharing >= lambda, LV-extended
    for (std::size_t r = 1; r < n; ++r) {
        if (static_cast<std::size_t>(idx.lcp[r]) < cfg.lambda) continue;
        std::size_t i = static_cast<std::size_t>(idx.sa[r - 1]);
        std::size_t j = static_cast<std::size_t>(idx.sa[r]);
        if (std::llabs(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j)) <=
            static_cast<std::int64_t>(cfg.k))
            continue;
        std::size_t len = lv_extend(idx, i, j, cfg.k);
        result.improve(i, static_cast<std::int64_t>(len), static_cast<std::int64_t>(j));
        std::size_t rev = lv_extend(idx, j, i, cfg.k);
        result.improve(j, static_cast<std::int64_t>(rev), static_cast<std::int64_t>(i));
    }

    GramSet set = build_gram_set(text, idx, cfg.lambda);
    auto pos_end = detail::whole_text_regions(n);
    const unsigned sigma = static_cast<unsigned>(text.alphabet.sigma());

    detail::parallel_chunks(n, threads, [&](std::size_t lo, std::size_t hi) {
        detail::SearchEngine engine(text, idx, set, Model::Edit, cfg.k, sigma, pos_end);
        for (std::size_t i = lo; i < hi; ++i) {
            ExclusionTable table(idx, i, cfg.k);
            if (result.p[i] == no_witness && table.contains(i))
                result.p[i] = table.replacement(i);
            auto hooks = detail::plcp_edit_hooks(i, table, cfg.k, result);
            engine.process(i, hooks);
        }
    });
    return result;
}

} // namespace plcpk
