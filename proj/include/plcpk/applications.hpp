#pragma once

#include <cmath>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <vector>

#include "plcpk/config.hpp"
#include "plcpk/detail/parallel.hpp"
#include "plcpk/detail/search_engine.hpp"
#include "plcpk/extend.hpp"
#include "plcpk/gram_set.hpp"
#include "plcpk/plcp_result.hpp"
#include "plcpk/suffix_index.hpp"

namespace plcpk {

// ---------------------------------------------------------------- mappability

/// count[m] = number of positions i <= n-m whose length-m window occurs
/// nowhere else within distance k (plcp_k[i] < m); answer[mu] = minimal m
/// with count[m] >= mu, 0 when unattainable.
struct MappabilityIndex {
    std::vector<std::int64_t> count;  // 1-based, count[0] unused
    std::vector<std::int64_t> answer; // 1-based, 0 encodes "none"
    std::size_t n = 0;
    int k = 0;
    Model model = Model::Hamming;
};

inline MappabilityIndex build_mappability(const PlcpResult& plcp) {
    const std::size_t n = plcp.size();
    MappabilityIndex midx;
    midx.n = n;
    midx.k = plcp.k;
    midx.model = plcp.model;

    // position i contributes to every m in [plcp[i]+1, n-i]
    std::vector<std::int64_t> diff(n + 2, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t lo = static_cast<std::size_t>(plcp.plcp[i]) + 1;
        std::size_t hi = n - i;
        if (lo > hi) continue;
        ++diff[lo];
        --diff[hi + 1];
    }
    midx.count.assign(n + 1, 0);
    std::int64_t running = 0;
    for (std::size_t m = 1; m <= n; ++m) {
        running += diff[m];
        midx.count[m] = running;
    }

    midx.answer.assign(n + 1, 0);
    std::size_t mu = 1;
    for (std::size_t m = 1; m <= n && mu <= n; ++m)
        while (mu <= n && static_cast<std::int64_t>(mu) <= midx.count[m])
            midx.answer[mu++] = static_cast<std::int64_t>(m);
    return midx;
}

/// Minimal m forcing at least mu unique length-m windows; 0 when none.
inline std::int64_t query_mappability(const MappabilityIndex& midx, std::size_t mu) {
    if (mu < 1 || mu > midx.n)
        throw input_error("mu must be in [1, n]");
    return midx.answer[mu];
}

// ------------------------------------------------------------- concatenation

namespace detail {

/// Concatenation of input strings with one distinct separator letter
/// between consecutive strings. Separator codes extend the shared base
/// alphabet, so a gram never matches across a string boundary.
struct Concat {
    Text text; // synthetic alphabet: base letters plus separators
    std::vector<std::size_t> pos_end;     // end of the enclosing region
    std::vector<std::size_t> start, stop; // per input string, half-open
    unsigned base_sigma = 0;
};

inline Alphabet synthetic_alphabet(std::size_t sigma_total) {
    if (sigma_total > 120)
        throw input_error("combined alphabet and separator count too large");
    std::vector<char> letters;
    letters.reserve(sigma_total);
    for (std::size_t c = 1; c <= sigma_total; ++c)
        letters.push_back(static_cast<char>(c));
    return Alphabet(std::move(letters));
}

inline Concat concatenate(const std::vector<const Text*>& parts) {
    if (parts.empty()) throw input_error("no input strings");
    const Alphabet& base = parts[0]->alphabet;
    for (const Text* p : parts)
        if (!(p->alphabet == base))
            throw input_error("all input strings must share one alphabet");

    Concat cc;
    cc.base_sigma = static_cast<unsigned>(base.sigma());
    std::size_t total = parts.size() - 1;
    for (const Text* p : parts) total += p->size();

    cc.text.alphabet = synthetic_alphabet(base.sigma() + parts.size() - 1);
    cc.text.codes.reserve(total);
    cc.pos_end.reserve(total);
    for (std::size_t s = 0; s < parts.size(); ++s) {
        cc.start.push_back(cc.text.codes.size());
        cc.text.codes.insert(cc.text.codes.end(), parts[s]->codes.begin(),
                             parts[s]->codes.end());
        cc.stop.push_back(cc.text.codes.size());
        cc.pos_end.resize(cc.text.codes.size(), cc.stop.back());
        if (s + 1 < parts.size()) {
            cc.text.codes.push_back(static_cast<code_t>(base.sigma() + 1 + s));
            cc.pos_end.push_back(cc.text.codes.size() - 1); // empty region
        }
    }
    return cc;
}

} // namespace detail

// ------------------------------------------------------------------ Lambda

struct LambdaArrays {
    std::vector<std::int64_t> lambda_xy; // |x| entries
    std::vector<std::int64_t> lambda_yx; // |y| entries
    int k = 0;
    Model model = Model::Hamming;
};

namespace detail {

/// One direction of the Lambda computation: grams from y's positions,
/// queries from x's positions, over the separated concatenation.
inline std::vector<std::int64_t> lambda_direction(const Text& x, const Text& y, int k,
                                                  Model model, double alpha,
                                                  bool allow_large_k, unsigned threads) {
    Concat cc = concatenate({&x, &y});
    const std::size_t n_total = cc.text.size();
    Config cfg = Config::make(n_total, k, alpha, allow_large_k);
    SuffixIndex idx = build_index(cc.text);

    std::vector<bool> in_y(n_total, false);
    for (std::size_t p = cc.start[1]; p < cc.stop[1]; ++p) in_y[p] = true;
    GramSet set = build_gram_set(cc.text, idx, cfg.lambda, &in_y);

    std::vector<std::int64_t> lam(x.size(), 0);
    parallel_chunks(x.size(), threads, [&](std::size_t lo, std::size_t hi) {
        SearchEngine engine(cc.text, idx, set, model, k, cc.base_sigma, cc.pos_end);
        for (std::size_t i = lo; i < hi; ++i) {
            SearchEngine::Hooks hooks;
            hooks.candidate = [&lam, i](std::size_t, std::size_t score) {
                lam[i] = std::max(lam[i], static_cast<std::int64_t>(score));
            };
            hooks.max_excluded = 0;
            engine.process(i, hooks);
        }
    });
    return lam;
}

} // namespace detail

/// Lambda_{x,y}[i] = max over j of lcp_k(x[i..], y[j..]) (x-side lengths),
/// in both directions. Cross-string exact gram hits are valid matches.
inline LambdaArrays compute_lambda(const Text& x, const Text& y, int k, Model model,
                                   double alpha = 4.0, bool allow_large_k = false,
                                   unsigned threads = 1) {
    LambdaArrays la;
    la.k = k;
    la.model = model;
    la.lambda_xy = detail::lambda_direction(x, y, k, model, alpha, allow_large_k, threads);
    la.lambda_yx = detail::lambda_direction(y, x, k, model, alpha, allow_large_k, threads);
    return la;
}

/// Average-common-substring normalization; the +3 offset in the correction
/// term makes the self-distance exactly zero.
inline constexpr const char* dist_formula_id = "acs-selfzero-v1";

inline double dist_k(const LambdaArrays& la, std::size_t nx, std::size_t ny) {
    if (nx == 0 || ny == 0) throw input_error("dist_k requires non-empty inputs");
    auto term = [](const std::vector<std::int64_t>& lam, std::size_t own, std::size_t other) {
        std::int64_t sum = std::accumulate(lam.begin(), lam.end(), std::int64_t{0});
        double avg = (static_cast<double>(sum) + static_cast<double>(lam.size())) /
                     static_cast<double>(lam.size()); // mean of (Lambda[i] + 1)
        return std::log2(static_cast<double>(other)) / avg -
               2.0 * std::log2(static_cast<double>(own)) / (static_cast<double>(own) + 3.0);
    };
    return 0.5 * (term(la.lambda_xy, nx, ny) + term(la.lambda_yx, ny, nx));
}

// ---------------------------------------------------------------- overlaps

/// len[s][t] = maximal length whose suffix-of-s / prefix-of-t windows are
/// within distance k; diagonal entries are the trivial full self-overlap.
struct OverlapResult {
    std::vector<std::vector<std::int64_t>> len;
    int k = 0;
    Model model = Model::Hamming;
};

inline OverlapResult all_pairs_overlaps(const std::vector<Text>& strings, int k, Model model,
                                        double alpha = 4.0, bool allow_large_k = false,
                                        unsigned threads = 1) {
    if (strings.size() < 2) throw input_error("overlaps need at least 2 strings");
    std::vector<const Text*> parts;
    parts.reserve(strings.size());
    for (const Text& s : strings) parts.push_back(&s);
    detail::Concat cc = detail::concatenate(parts);
    const std::size_t n_total = cc.text.size();
    const std::size_t M = strings.size();
    Config cfg = Config::make(n_total, k, alpha, allow_large_k);
    SuffixIndex idx = build_index(cc.text);

    // only string starts (whole-string prefixes) enter the gram set
    std::vector<bool> is_start(n_total, false);
    std::vector<std::size_t> string_of(n_total, M);
    for (std::size_t s = 0; s < M; ++s) {
        is_start[cc.start[s]] = true;
        for (std::size_t p = cc.start[s]; p < cc.stop[s]; ++p) string_of[p] = s;
    }
    GramSet set = build_gram_set(cc.text, idx, cfg.lambda, &is_start);

    OverlapResult res;
    res.k = k;
    res.model = model;
    res.len.assign(M, std::vector<std::int64_t>(M, 0));
    for (std::size_t s = 0; s < M; ++s)
        res.len[s][s] = static_cast<std::int64_t>(strings[s].size());

    std::mutex merge_mutex;
    for (std::size_t s = 0; s < M; ++s) {
        const std::size_t width = cc.stop[s] - cc.start[s];
        detail::parallel_chunks(width, threads, [&](std::size_t lo, std::size_t hi) {
            std::vector<std::int64_t> row(M, 0);
            detail::SearchEngine engine(cc.text, idx, set, model, k, cc.base_sigma, cc.pos_end);
            for (std::size_t off = lo; off < hi; ++off) {
                std::size_t p = cc.start[s] + off;
                std::size_t tau = cc.stop[s] - p; // candidate overlap length
                detail::SearchEngine::Hooks hooks;
                hooks.excluded = [&cc, s](std::size_t t) { return t == cc.start[s]; };
                hooks.agreement_threshold = tau;
                hooks.max_excluded = 1;
                hooks.scorer = [&, p, tau](std::size_t, std::size_t t) -> std::size_t {
                    std::size_t u = string_of[t];
                    if (tau > strings[u].size()) return 0;
                    if (model == Model::Hamming)
                        return hamming_extend(idx, p, t, k, p + tau, t + tau);
                    return lv_within(idx, p, t, tau, k) ? tau : 0;
                };
                hooks.candidate = [&row, &string_of, tau](std::size_t t, std::size_t score) {
                    if (score == tau)
                        row[string_of[t]] =
                            std::max(row[string_of[t]], static_cast<std::int64_t>(tau));
                };
                engine.process(p, hooks);
            }
            std::lock_guard<std::mutex> lock(merge_mutex);
            for (std::size_t u = 0; u < M; ++u)
                if (u != s) res.len[s][u] = std::max(res.len[s][u], row[u]);
        });
    }
    return res;
}

} // namespace plcpk
