#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "plcpk/detail/flat_map.hpp"

namespace plcpk {

/// Static y-fast trie over uint64 keys: an x-fast top structure indexes one
/// representative (the minimum) per balanced bottom bucket of Theta(w) sorted
/// keys. Built once from a sorted key list; queries answer exact, strict
/// predecessor and strict successor as ranks into that list.
class YFastTrie {
public:
    YFastTrie() = default;

    /// keys must be strictly increasing. universe_bits bounds the key width.
    YFastTrie(std::vector<std::uint64_t> keys, unsigned universe_bits)
        : keys_(std::move(keys)), bits_(universe_bits == 0 ? 1 : universe_bits) {
        const std::size_t n = keys_.size();
        const std::size_t bucket = std::max<std::size_t>(1, bits_);
        for (std::size_t i = 0; i < n; i += bucket) rep_rank_.push_back(i);

        levels_.reserve(bits_ + 1);
        for (unsigned l = 0; l <= bits_; ++l)
            levels_.emplace_back(detail::FlatMap64<Node>(rep_rank_.size()));
        for (std::size_t b = 0; b < rep_rank_.size(); ++b) {
            std::uint64_t key = keys_[rep_rank_[b]];
            for (unsigned l = 0; l <= bits_; ++l) {
                Node& node = levels_[l][l == 64 ? 0 : key >> l];
                node.min_bucket = std::min<std::uint32_t>(node.min_bucket,
                                                          static_cast<std::uint32_t>(b));
                node.max_bucket = std::max<std::uint32_t>(node.max_bucket,
                                                          static_cast<std::uint32_t>(b));
            }
        }
        unsigned depth = std::bit_width(std::max<std::size_t>(1, rep_rank_.size()));
        hint_ = bits_ > depth ? bits_ - depth : 0;
    }

    std::size_t size() const { return keys_.size(); }

    struct Pos {
        std::size_t insert_rank; // number of keys strictly less than the query
        bool exact;
    };

    /// Insertion point and exact-match flag from a single trie descent.
    Pos locate(std::uint64_t key) const {
        if (keys_.empty() || key < keys_.front()) return {0, false};
        std::size_t b = bucket_at_or_before(key);
        std::size_t lo = rep_rank_[b];
        std::size_t hi = b + 1 < rep_rank_.size() ? rep_rank_[b + 1] : keys_.size();
        for (std::size_t at = lo; at < hi; at += 8) __builtin_prefetch(&keys_[at]);
        std::size_t r = lower_bound_rank(lo, hi, key);
        return {r, r < keys_.size() && keys_[r] == key};
    }

    std::optional<std::size_t> exact(std::uint64_t key) const {
        Pos p = locate(key);
        if (!p.exact) return std::nullopt;
        return p.insert_rank;
    }

    /// Rank of the greatest key strictly less than `key`.
    std::optional<std::size_t> pred(std::uint64_t key) const {
        if (keys_.empty() || key <= keys_.front()) return std::nullopt;
        std::size_t b = bucket_at_or_before(key);
        // greatest key < `key` within bucket b, else last key of bucket b-1
        std::size_t lo = rep_rank_[b];
        std::size_t hi = b + 1 < rep_rank_.size() ? rep_rank_[b + 1] : keys_.size();
        std::size_t r = lower_bound_rank(lo, hi, key);
        if (r > lo) return r - 1;
        return lo == 0 ? std::nullopt : std::optional<std::size_t>(lo - 1);
    }

    /// Rank of the least key strictly greater than `key`.
    std::optional<std::size_t> succ(std::uint64_t key) const {
        if (keys_.empty() || key >= keys_.back()) return std::nullopt;
        if (key < keys_.front()) return 0;
        std::size_t b = bucket_at_or_before(key);
        std::size_t lo = rep_rank_[b];
        std::size_t hi = b + 1 < rep_rank_.size() ? rep_rank_[b + 1] : keys_.size();
        std::size_t r = upper_bound_rank(lo, hi, key);
        if (r < hi) return r;
        return hi < keys_.size() ? std::optional<std::size_t>(hi) : std::nullopt;
    }

    std::uint64_t key_at(std::size_t rank) const { return keys_[rank]; }

private:
    struct Node {
        std::uint32_t min_bucket = static_cast<std::uint32_t>(-1);
        std::uint32_t max_bucket = 0;
    };

    /// Index of the bucket whose representative is the greatest <= key.
    /// Precondition: key >= keys_.front().
    std::size_t bucket_at_or_before(std::uint64_t key) const {
        if (const Node* node = levels_[0].find(key)) return node->min_bucket;
        // find the lowest level with a matching stored prefix (presence is
        // monotone in the level); binary search, seeded with a probe at the
        // level where random keys typically stop sharing prefixes with reps
        unsigned lo = 0, hi = bits_; // levels_[bits_] holds prefix 0: always present
        if (hint_ > 0 && hint_ < bits_) {
            if (levels_[hint_].contains(prefix_of(key, hint_)))
                hi = hint_;
            else
                lo = hint_;
        }
        while (lo + 1 < hi) {
            unsigned mid = (lo + hi) / 2;
            if (levels_[mid].contains(prefix_of(key, mid)))
                hi = mid;
            else
                lo = mid;
        }
        unsigned l = levels_[lo].contains(prefix_of(key, lo)) ? lo : hi;
        const Node& node = *levels_[l].find(prefix_of(key, l));
        // key diverges from every rep below level l; its branch bit decides
        // whether all reps under the node sit before or after key
        bool key_in_right = l > 0 && ((key >> (l - 1)) & 1u);
        if (key_in_right) return node.max_bucket;
        return node.min_bucket - 1; // front-key precondition keeps this valid
    }

    std::uint64_t prefix_of(std::uint64_t key, unsigned level) const {
        return level >= 64 ? 0 : key >> level;
    }

    std::size_t lower_bound_rank(std::size_t lo, std::size_t hi, std::uint64_t key) const {
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (keys_[mid] < key)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }

    std::size_t upper_bound_rank(std::size_t lo, std::size_t hi, std::uint64_t key) const {
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (keys_[mid] <= key)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }

    std::vector<std::uint64_t> keys_;
    unsigned bits_ = 1;
    unsigned hint_ = 0;
    std::vector<std::size_t> rep_rank_;
    std::vector<detail::FlatMap64<Node>> levels_;
};

} // namespace plcpk
