#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "plcpk/config.hpp"
#include "plcpk/plcp_hamming.hpp"
#include "plcpk/rng.hpp"

namespace plcpk {

/// Uniform i.i.d. random text over the first sigma uppercase letters.
inline Text random_text(std::size_t n, unsigned sigma, std::uint64_t seed) {
    if (sigma < 2 || sigma > 26) throw input_error("sigma must be in [2, 26]");
    std::vector<char> letters;
    for (unsigned c = 0; c < sigma; ++c) letters.push_back(static_cast<char>('A' + c));
    Text t;
    t.alphabet = Alphabet(letters);
    t.codes.reserve(n);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        t.codes.push_back(static_cast<code_t>(rng.below(sigma) + 1));
    return t;
}

/// SA-adjacent suffix pairs sharing a prefix of at least lambda.
inline std::size_t count_long_pairs(const SuffixIndex& idx, std::size_t lambda) {
    std::size_t cnt = 0;
    for (std::size_t r = 1; r < idx.size(); ++r)
        if (static_cast<std::size_t>(idx.lcp[r]) >= lambda) ++cnt;
    return cnt;
}

struct ExperimentRow {
    std::size_t n = 0;
    unsigned sigma = 0;
    int k = 0;
    unsigned trial = 0;
    std::int64_t max_plcp = 0;
    double ratio = 0.0; // max_plcp / log_sigma(n)
    std::size_t long_pairs = 0;
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;
    bool statistically_weak = false; // trials < 10
};

/// Per trial: draw a uniform text, run the fast Hamming path, record the
/// maximal k-error prefix length, its ratio to log_sigma n, and the
/// long-pair count. Trials are independent and seeded by (n, trial), so
/// the report is reproducible and mergeable in trial order.
inline ExperimentReport experiment_expected_length(unsigned sigma, int k,
                                                   const std::vector<std::size_t>& sizes,
                                                   unsigned trials, std::uint64_t seed,
                                                   double alpha = 4.0, unsigned threads = 1) {
    ExperimentReport report;
    report.statistically_weak = trials < 10;
    for (std::size_t n : sizes) {
        Config cfg = Config::make(n, k, alpha);
        for (unsigned trial = 0; trial < trials; ++trial) {
            Text text = random_text(n, sigma, derive_seed(seed, n, trial));
            SuffixIndex idx = build_index(text);
            PlcpResult res = compute_plcp_hamming(text, cfg, threads);
            ExperimentRow row;
            row.n = n;
            row.sigma = sigma;
            row.k = k;
            row.trial = trial;
            for (std::int64_t v : res.plcp) row.max_plcp = std::max(row.max_plcp, v);
            double log_sigma_n = std::log2(static_cast<double>(n)) /
                                 std::log2(static_cast<double>(sigma));
            row.ratio = static_cast<double>(row.max_plcp) / log_sigma_n;
            row.long_pairs = count_long_pairs(idx, cfg.lambda);
            report.rows.push_back(row);
        }
    }
    return report;
}

inline void write_experiment_tsv(std::ostream& out, const ExperimentReport& report) {
    out << "n\tsigma\tk\ttrial\tmax_plcp\tratio\tlong_pairs\n";
    for (const ExperimentRow& r : report.rows) {
        std::ostringstream ratio;
        ratio.setf(std::ios::fixed);
        ratio.precision(6);
        ratio << r.ratio;
        out << r.n << '\t' << r.sigma << '\t' << r.k << '\t' << r.trial << '\t' << r.max_plcp
            << '\t' << ratio.str() << '\t' << r.long_pairs << '\n';
    }
}

} // namespace plcpk
