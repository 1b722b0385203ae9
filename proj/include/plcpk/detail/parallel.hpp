#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace plcpk {
namespace detail {

/// Runs fn(begin, end) on contiguous chunks of [0, n); threads <= 1 runs
/// the whole range on the calling thread.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn fn) {
    if (threads <= 1 || n < 2) {
        fn(std::size_t{0}, n);
        return;
    }
    unsigned workers = std::min<std::size_t>(threads, n);
    std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = static_cast<std::size_t>(w) * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(fn, lo, hi);
    }
    for (std::thread& t : pool) t.join();
}

} // namespace detail
} // namespace plcpk
