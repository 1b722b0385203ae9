#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "plcpk/experiment.hpp"
#include "plcpk/suffix_index.hpp"

using namespace plcpk;

namespace {

std::vector<std::int32_t> naive_suffix_array(const Text& t) {
    std::string s = t.decoded();
    std::vector<std::int32_t> sa(t.size());
    std::iota(sa.begin(), sa.end(), 0);
    std::sort(sa.begin(), sa.end(), [&](std::int32_t a, std::int32_t b) {
        return s.substr(a) < s.substr(b);
    });
    return sa;
}

std::size_t naive_lce(const Text& t, std::size_t i, std::size_t j) {
    std::size_t l = 0;
    while (i + l < t.size() && j + l < t.size() && t.codes[i + l] == t.codes[j + l]) ++l;
    return l;
}

} // namespace

TEST_CASE("suffix array and LCP match the naive construction") {
    Rng rng(11);
    for (int rep = 0; rep < 120; ++rep) {
        std::size_t n = 1 + rng.below(80);
        unsigned sigma = 2 + static_cast<unsigned>(rng.below(4));
        Text t = random_text(n, sigma, rng.next());
        SuffixIndex idx = build_index(t);
        std::vector<std::int32_t> expect = naive_suffix_array(t);
        CHECK(idx.sa == expect);
        for (std::size_t r = 0; r < n; ++r)
            CHECK(idx.isa[idx.sa[r]] == static_cast<std::int32_t>(r));
        CHECK(idx.lcp[0] == 0);
        for (std::size_t r = 1; r < n; ++r)
            CHECK(static_cast<std::size_t>(idx.lcp[r]) ==
                  naive_lce(t, static_cast<std::size_t>(idx.sa[r - 1]),
                            static_cast<std::size_t>(idx.sa[r])));
    }
}

TEST_CASE("lce equals the direct scan, short and long agreements") {
    // repetitive text produces agreements well past the 16-letter fast path
    Rng rng(23);
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t n = 40 + rng.below(160);
        Text t = random_text(n, 2, rng.next());
        for (std::size_t i = 0; i + 50 < n; i += 17) // plant long repeats
            t.codes[i + 50] = t.codes[i];
        SuffixIndex idx = build_index(t);
        for (int q = 0; q < 300; ++q) {
            std::size_t i = rng.below(n), j = rng.below(n);
            CHECK(idx.lce(i, j) == (i == j ? n - i : naive_lce(t, i, j)));
        }
    }
}

TEST_CASE("plcp0_init equals the naive zero-error maximum") {
    Rng rng(31);
    for (int rep = 0; rep < 60; ++rep) {
        std::size_t n = 1 + rng.below(60);
        Text t = random_text(n, 2 + static_cast<unsigned>(rng.below(3)), rng.next());
        SuffixIndex idx = build_index(t);
        PlcpResult res = plcp0_init(idx);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t best = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) best = std::max(best, naive_lce(t, i, j));
            if (n == 1) {
                CHECK(res.p[i] == no_witness);
                continue;
            }
            CHECK(res.plcp[i] == static_cast<std::int64_t>(best));
            CHECK(res.p[i] != static_cast<std::int64_t>(i));
            CHECK(res.p[i] >= 0);
            CHECK(naive_lce(t, i, static_cast<std::size_t>(res.p[i])) >= best);
        }
    }
}

TEST_CASE("plcp0 ties break toward the lexicographic predecessor") {
    // suffix "ABDABE" (i=3) shares lcp 2 with both SA neighbors,
    // "ABCABDABE" (i=0) and "ABE" (i=6); the predecessor must win
    Text t = encode_text("ABCABDABE");
    SuffixIndex idx = build_index(t);
    PlcpResult res = plcp0_init(idx);
    CHECK(res.plcp[3] == 2);
    CHECK(res.p[3] == 0);
}

TEST_CASE("best_neighbor_outside maximizes lce among allowed positions") {
    Rng rng(47);
    for (int rep = 0; rep < 60; ++rep) {
        std::size_t n = 2 + rng.below(50);
        Text t = random_text(n, 2, rng.next());
        SuffixIndex idx = build_index(t);
        std::size_t lo = rng.below(n);
        std::size_t hi = std::min(n - 1, lo + rng.below(4));
        auto excluded = [&](std::size_t p) { return p >= lo && p <= hi; };
        for (std::size_t j = lo; j <= hi; ++j) {
            auto [pos, len] = best_neighbor_outside(idx, j, excluded);
            std::int64_t best = -1;
            for (std::size_t p = 0; p < n; ++p)
                if (!excluded(p))
                    best = std::max(best, static_cast<std::int64_t>(naive_lce(t, j, p)));
            if (best < 0) {
                CHECK(pos == no_witness);
            } else {
                REQUIRE(pos >= 0);
                CHECK_FALSE(excluded(static_cast<std::size_t>(pos)));
                CHECK(static_cast<std::int64_t>(len) == best);
                CHECK(naive_lce(t, j, static_cast<std::size_t>(pos)) ==
                      static_cast<std::size_t>(best));
            }
        }
    }
}

TEST_CASE("range minimum answers arbitrary intervals") {
    Rng rng(3);
    std::vector<std::int32_t> a;
    for (int i = 0; i < 200; ++i) a.push_back(static_cast<std::int32_t>(rng.below(1000)));
    RangeMin rmq(a);
    for (int q = 0; q < 2000; ++q) {
        std::size_t lo = rng.below(a.size());
        std::size_t hi = lo + rng.below(a.size() - lo);
        CHECK(rmq.min(lo, hi) == *std::min_element(a.begin() + lo, a.begin() + hi + 1));
    }
}
