#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "plcpk/gram.hpp"
#include "plcpk/suffix_index.hpp"
#include "plcpk/yfast.hpp"

namespace plcpk {

/// One distinct lambda-gram with the SA rows of the suffixes sharing it.
struct GramEntry {
    PackedGram key;
    std::size_t sa_lo = 0;      // first member's SA row
    std::size_t sa_hi = 0;      // last member's SA row (inclusive)
    std::size_t members_lo = 0; // slice into GramSet::member_rows
    std::size_t members_hi = 0; // exclusive
};

/// Ordered set over the distinct packed lambda-grams of (a subset of) the
/// text's positions. The y-fast trie indexes the distinct leading words;
/// entries sharing a leading word (rare on non-degenerate inputs) form one
/// bucket resolved by a short search. Static after build; concurrent reads
/// are safe.
class GramSet {
public:
    struct Locate {
        std::optional<std::size_t> exact, pred, succ;
    };

    GramSet() = default;

    const GramCodec& codec() const { return codec_; }
    std::size_t size() const { return entries_.size(); }
    const GramEntry& entry(std::size_t e) const { return entries_[e]; }

    /// Text positions sharing the gram of entry e.
    std::size_t member_count(std::size_t e) const { return hot_[e].count; }
    std::size_t member_position(std::size_t e, std::size_t m) const {
        return member_positions_[entries_[e].members_lo + m];
    }
    /// First member without touching the entry record (hot path).
    std::size_t first_member(std::size_t e) const { return hot_[e].member; }

    /// Letters on which z agrees with entry e's key. The common case (the
    /// keys already differ in the leading word) avoids the entry record.
    std::size_t agreement(const PackedGram& z, std::size_t e) const {
        std::uint64_t d = z.words[0] ^ hot_[e].word;
        if (d != 0) return codec_.word_agreement(d);
        return codec_.xor_lcp(z, entries_[e].key);
    }

    /// Exact hit plus strict neighbors of `key`, from one trie descent.
    Locate locate(const PackedGram& key) const {
        Locate r;
        if (entries_.empty()) return r;
        YFastTrie::Pos p = yfast_.locate(key.words[0]);
        std::size_t idx; // insertion point of key in entries_
        if (p.exact) {
            std::size_t lo = bucket_lo_[p.insert_rank], hi = bucket_lo_[p.insert_rank + 1];
            idx = lo;
            while (idx < hi && entries_[idx].key < key) ++idx;
            if (idx < hi && entries_[idx].key == key) {
                r.exact = idx;
                if (idx + 1 < entries_.size()) r.succ = idx + 1;
            } else if (idx < entries_.size()) {
                r.succ = idx;
            }
        } else {
            idx = bucket_lo_[p.insert_rank]; // first entry of the next leading word
            if (idx < entries_.size()) r.succ = idx;
        }
        if (idx > 0) r.pred = idx - 1;
        return r;
    }

    std::optional<std::size_t> find_exact(const PackedGram& key) const {
        return locate(key).exact;
    }
    /// Greatest entry with key' < key (strict, so exact matches are skipped).
    std::optional<std::size_t> find_pred(const PackedGram& key) const {
        return locate(key).pred;
    }
    /// Least entry with key' > key (strict).
    std::optional<std::size_t> find_succ(const PackedGram& key) const {
        return locate(key).succ;
    }

    friend GramSet build_gram_set(const Text&, const SuffixIndex&, std::size_t,
                                  const std::vector<bool>*);

private:
    GramCodec codec_;
    // compact per-entry copy of the hot fields; the 96-byte entry records
    // cost a cache miss each once the set outgrows L2
    struct HotEntry {
        std::uint64_t word;   // leading key word
        std::uint32_t member; // first member position
        std::uint32_t count;  // member count
    };

    std::vector<GramEntry> entries_; // strictly increasing keys
    std::vector<std::size_t> member_positions_;
    std::vector<HotEntry> hot_;
    std::vector<std::size_t> bucket_lo_; // entry range per distinct leading word
    YFastTrie yfast_;                    // over distinct leading words
};

/// Groups SA rows whose suffixes share a length-lambda prefix (consecutive
/// rows with LCP >= lambda) into one entry per distinct gram. When
/// `position_filter` is given, only positions with filter[pos] == true are
/// inserted; entry intervals then cover the filtered rows.
inline GramSet build_gram_set(const Text& text, const SuffixIndex& idx, std::size_t lambda,
                              const std::vector<bool>* position_filter = nullptr) {
    const std::size_t n = idx.size();
    GramSet set;
    set.codec_ = GramCodec(text.alphabet.bits_per_letter(), lambda);

    std::int64_t prev_row = -1;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t pos = static_cast<std::size_t>(idx.sa[r]);
        if (position_filter && !(*position_filter)[pos]) continue;
        bool same_gram = false;
        if (prev_row >= 0) {
            std::int32_t run = idx.rmq.min(static_cast<std::size_t>(prev_row) + 1, r);
            same_gram = static_cast<std::size_t>(run) >= lambda;
        }
        if (same_gram) {
            GramEntry& e = set.entries_.back();
            e.sa_hi = r;
            e.members_hi = set.member_positions_.size() + 1;
        } else {
            GramEntry e;
            e.key = set.codec_.pack(text, pos);
            e.sa_lo = e.sa_hi = r;
            e.members_lo = set.member_positions_.size();
            e.members_hi = e.members_lo + 1;
            set.entries_.push_back(e);
        }
        set.member_positions_.push_back(pos);
        prev_row = static_cast<std::int64_t>(r);
    }

    std::vector<std::uint64_t> leading;
    leading.reserve(set.entries_.size());
    set.hot_.reserve(set.entries_.size());
    for (std::size_t e = 0; e < set.entries_.size(); ++e) {
        const GramEntry& ge = set.entries_[e];
        set.hot_.push_back(
            {ge.key.words[0],
             static_cast<std::uint32_t>(set.member_positions_[ge.members_lo]),
             static_cast<std::uint32_t>(ge.members_hi - ge.members_lo)});
        if (e == 0 || set.entries_[e].key.words[0] != leading.back()) {
            leading.push_back(set.entries_[e].key.words[0]);
            set.bucket_lo_.push_back(e);
        }
    }
    set.bucket_lo_.push_back(set.entries_.size());
    set.yfast_ = YFastTrie(std::move(leading), set.codec_.used_bits_per_word());
    return set;
}

} // namespace plcpk
