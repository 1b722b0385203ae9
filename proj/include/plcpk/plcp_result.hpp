#pragma once

#include <cstdint>
#include <vector>

#include "plcpk/config.hpp"

namespace plcpk {

constexpr std::int64_t no_witness = -1;

/// Output of one PLCP_k computation: per-position maximal k-error prefix
/// length and a witness position attaining it (-1 when undefined).
struct PlcpResult {
    std::vector<std::int64_t> plcp;
    std::vector<std::int64_t> p;
    Model model = Model::Hamming;
    int k = 0;

    std::size_t size() const { return plcp.size(); }

    /// Keep the first maximal witness: overwrite only on strict improvement.
    void improve(std::size_t i, std::int64_t len, std::int64_t witness) {
        if (len > plcp[i]) {
            plcp[i] = len;
            p[i] = witness;
        }
    }
};

} // namespace plcpk
