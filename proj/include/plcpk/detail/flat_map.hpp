#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace plcpk {
namespace detail {

/// Minimal open-addressing hash map from uint64 keys to V, sized once up
/// front. Node-based std::unordered_map costs two dependent cache misses
/// per probe, which dominates the trie descent; a flat table costs one.
template <typename V>
class FlatMap64 {
public:
    FlatMap64() = default;

    explicit FlatMap64(std::size_t expected) {
        std::size_t cap = std::bit_ceil(std::max<std::size_t>(8, expected * 2));
        mask_ = cap - 1;
        slots_.assign(cap, Slot{});
    }

    /// Returns the value slot for key, default-constructing on first use.
    /// The table never grows; callers size it for all inserts.
    V& operator[](std::uint64_t key) {
        std::size_t at = probe(key);
        if (!slots_[at].used) {
            slots_[at].used = true;
            slots_[at].key = key;
            slots_[at].value = V{};
        }
        return slots_[at].value;
    }

    const V* find(std::uint64_t key) const {
        std::size_t at = probe(key);
        return slots_[at].used ? &slots_[at].value : nullptr;
    }

    bool contains(std::uint64_t key) const { return find(key) != nullptr; }

    /// Hint the first probe slot into cache ahead of a batch of lookups.
    void prefetch(std::uint64_t key) const {
        __builtin_prefetch(&slots_[static_cast<std::size_t>(mix(key)) & mask_]);
    }

private:
    struct Slot {
        std::uint64_t key = 0;
        V value{};
        bool used = false;
    };

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::size_t probe(std::uint64_t key) const {
        std::size_t at = static_cast<std::size_t>(mix(key)) & mask_;
        while (slots_[at].used && slots_[at].key != key) at = (at + 1) & mask_;
        return at;
    }

    std::vector<Slot> slots_;
    std::size_t mask_ = 0;
};

} // namespace detail
} // namespace plcpk
