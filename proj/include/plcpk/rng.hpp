#pragma once

#include <cstdint>

namespace plcpk {

/// Counter-based splitmix64 stream. Deliberately not std::mt19937 /
/// std::uniform_int_distribution: their outputs are not specified
/// bit-for-bit across standard library implementations, and experiment
/// reports must be byte-identical for a fixed seed everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection, bias-free.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Stable per-(label, index) seed derivation for independent substreams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label, std::uint64_t index) {
    Rng mix(seed ^ (label * 0xd6e8feb86659fd93ULL) ^ (index * 0xa3b195354a39b70dULL));
    mix.next();
    return mix.next();
}

} // namespace plcpk
