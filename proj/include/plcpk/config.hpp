#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "plcpk/alphabet.hpp"

namespace plcpk {

enum class Model { Hamming, Edit };

inline const char* model_name(Model m) { return m == Model::Hamming ? "hamming" : "edit"; }

/// Error budget and gram-length parameters for one run.
/// lambda = ceil(alpha * log2 n), capped at n.
struct Config {
    int k = 0;
    double alpha = 4.0;
    std::size_t lambda = 1;

    static std::size_t lambda_for(std::size_t n, double alpha) {
        if (n <= 1) return 1;
        auto lam = static_cast<std::size_t>(std::ceil(alpha * std::log2(static_cast<double>(n))));
        return std::max<std::size_t>(1, std::min(lam, n));
    }

    /// k must satisfy k <= log n / log log n (n >= 4) unless allow_large_k is set.
    static Config make(std::size_t n, int k, double alpha = 4.0, bool allow_large_k = false) {
        if (n == 0) throw input_error("text must be non-empty");
        if (k < 0) throw input_error("k must be >= 0");
        if (static_cast<std::size_t>(k) >= n) throw input_error("k must be smaller than n");
        if (alpha <= 1.0) throw input_error("alpha must be > 1");
        if (!allow_large_k && n >= 4) {
            double lim = std::log2(static_cast<double>(n)) /
                         std::log2(std::log2(static_cast<double>(n)));
            if (static_cast<double>(k) > lim)
                throw input_error("k = " + std::to_string(k) +
                                  " exceeds log n / log log n = " + std::to_string(lim) +
                                  " (use the override flag to force)");
        }
        Config cfg;
        cfg.k = k;
        cfg.alpha = alpha;
        cfg.lambda = lambda_for(n, alpha);
        return cfg;
    }
};

} // namespace plcpk
