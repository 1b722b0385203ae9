#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "doctest.h"
#include "plcpk/experiment.hpp"
#include "plcpk/gram_set.hpp"
#include "plcpk/yfast.hpp"

using namespace plcpk;

namespace {

struct SortedOracle {
    std::vector<std::uint64_t> keys; // strictly increasing

    std::optional<std::size_t> exact(std::uint64_t k) const {
        auto it = std::lower_bound(keys.begin(), keys.end(), k);
        if (it == keys.end() || *it != k) return std::nullopt;
        return static_cast<std::size_t>(it - keys.begin());
    }
    std::optional<std::size_t> pred(std::uint64_t k) const {
        auto it = std::lower_bound(keys.begin(), keys.end(), k);
        if (it == keys.begin()) return std::nullopt;
        return static_cast<std::size_t>(it - keys.begin()) - 1;
    }
    std::optional<std::size_t> succ(std::uint64_t k) const {
        auto it = std::upper_bound(keys.begin(), keys.end(), k);
        if (it == keys.end()) return std::nullopt;
        return static_cast<std::size_t>(it - keys.begin());
    }
};

std::vector<std::uint64_t> random_keys(Rng& rng, std::size_t count, unsigned bits) {
    std::set<std::uint64_t> s;
    std::uint64_t mask = bits >= 64 ? ~0ull : (1ull << bits) - 1;
    while (s.size() < count) s.insert(rng.next() & mask);
    return {s.begin(), s.end()};
}

} // namespace

TEST_CASE("trie equals the sorted-array oracle on random operations") {
    Rng rng(1234);
    int ops = 0;
    while (ops < 10000) {
        unsigned bits = 4 + static_cast<unsigned>(rng.below(61));
        std::uint64_t mask = bits >= 64 ? ~0ull : (1ull << bits) - 1;
        std::size_t count = 1 + rng.below(300);
        count = std::min<std::size_t>(count, mask); // universe may be tiny
        std::vector<std::uint64_t> keys = random_keys(rng, count, bits);
        SortedOracle oracle{keys};
        YFastTrie trie(keys, bits);
        CHECK(trie.size() == keys.size());
        for (int q = 0; q < 40; ++q, ++ops) {
            // half the queries nudge an existing key to land near bucket edges
            std::uint64_t k = q % 2 == 0 ? rng.next() & mask
                                         : (keys[rng.below(keys.size())] +
                                            rng.below(3) - 1) & mask;
            CHECK(trie.exact(k) == oracle.exact(k));
            CHECK(trie.pred(k) == oracle.pred(k));
            CHECK(trie.succ(k) == oracle.succ(k));
            YFastTrie::Pos pos = trie.locate(k);
            auto it = std::lower_bound(keys.begin(), keys.end(), k);
            CHECK(pos.insert_rank == static_cast<std::size_t>(it - keys.begin()));
            CHECK(pos.exact == (it != keys.end() && *it == k));
        }
    }
}

TEST_CASE("trie handles dense and adversarially clustered key sets") {
    Rng rng(99);
    for (std::size_t count : {1, 2, 3, 64, 65, 128, 512}) {
        // clustered: consecutive runs separated by large gaps
        std::set<std::uint64_t> s;
        std::uint64_t base = 0;
        while (s.size() < count) {
            base += 1 + rng.below(1ull << 40);
            for (std::uint64_t d = 0; d < 1 + rng.below(8) && s.size() < count; ++d)
                s.insert(base + d);
        }
        std::vector<std::uint64_t> keys(s.begin(), s.end());
        SortedOracle oracle{keys};
        YFastTrie trie(keys, 63);
        for (int q = 0; q < 500; ++q) {
            std::uint64_t k = q % 2 == 0 ? rng.next() >> 1
                                         : keys[rng.below(keys.size())] + rng.below(3) - 1;
            k &= (1ull << 63) - 1;
            CHECK(trie.exact(k) == oracle.exact(k));
            CHECK(trie.pred(k) == oracle.pred(k));
            CHECK(trie.succ(k) == oracle.succ(k));
        }
    }
}

TEST_CASE("three-query maximal prefix property, exhaustive on small universes") {
    // for every key set over a small universe and every query, the best
    // agreement with any stored key is attained by exact, pred or succ
    Rng rng(5);
    for (int rep = 0; rep < 400; ++rep) {
        unsigned bits = 9;
        std::size_t count = 1 + rng.below(512);
        std::vector<std::uint64_t> keys = random_keys(rng, count, bits);
        YFastTrie trie(keys, bits);
        auto agreement = [&](std::uint64_t a, std::uint64_t b) {
            return a == b ? 64u : static_cast<unsigned>(std::countl_zero(a ^ b));
        };
        for (std::uint64_t q = 0; q < (1ull << bits); ++q) {
            unsigned best = 0;
            for (std::uint64_t k : keys) best = std::max(best, agreement(q, k));
            unsigned got = 0;
            if (auto e = trie.exact(q)) got = std::max(got, agreement(q, trie.key_at(*e)));
            if (auto p = trie.pred(q)) got = std::max(got, agreement(q, trie.key_at(*p)));
            if (auto s = trie.succ(q)) got = std::max(got, agreement(q, trie.key_at(*s)));
            CHECK(got == best);
        }
    }
}

TEST_CASE("gram set locate returns exact hit and strict neighbors") {
    Rng rng(77);
    for (int rep = 0; rep < 80; ++rep) {
        std::size_t n = 2 + rng.below(120);
        Text t = random_text(n, 2 + static_cast<unsigned>(rng.below(3)), rng.next());
        std::size_t lambda = 1 + rng.below(24);
        SuffixIndex idx = build_index(t);
        GramSet set = build_gram_set(t, idx, lambda);
        const GramCodec& codec = set.codec();

        // entries are strictly increasing and group exactly the equal grams
        std::vector<PackedGram> all;
        for (std::size_t i = 0; i < n; ++i) all.push_back(codec.pack(t, i));
        for (std::size_t e = 1; e < set.size(); ++e)
            CHECK(set.entry(e - 1).key < set.entry(e).key);
        std::size_t members = 0;
        for (std::size_t e = 0; e < set.size(); ++e) {
            members += set.member_count(e);
            for (std::size_t m = 0; m < set.member_count(e); ++m)
                CHECK(all[set.member_position(e, m)] == set.entry(e).key);
        }
        CHECK(members == n);

        for (int q = 0; q < 60; ++q) {
            // query a real gram, possibly perturbed in one digit
            PackedGram z = all[rng.below(n)];
            GramSet::Locate loc = set.locate(z);
            std::size_t best = 0;
            bool present = false;
            for (std::size_t e = 0; e < set.size(); ++e) {
                if (set.entry(e).key == z) present = true;
                else best = std::max(best, codec.xor_lcp(z, set.entry(e).key));
            }
            CHECK(loc.exact.has_value() == present);
            if (loc.exact) CHECK(set.entry(*loc.exact).key == z);
            std::size_t got = 0;
            if (loc.pred) {
                CHECK(set.entry(*loc.pred).key < z);
                got = std::max(got, set.agreement(z, *loc.pred));
            }
            if (loc.succ) {
                CHECK(z < set.entry(*loc.succ).key);
                got = std::max(got, set.agreement(z, *loc.succ));
            }
            if (set.size() > (present ? 1u : 0u)) CHECK(got == best);
        }
    }
}
