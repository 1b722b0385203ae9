#include <span>

#include "doctest.h"
#include "plcpk/experiment.hpp"
#include "plcpk/oracle.hpp"

using namespace plcpk;

TEST_CASE("hamming reference on fixed fixtures") {
    {
        PlcpResult r = oracle::brute_plcp_hamming(encode_text("AAAA"), 1);
        CHECK(r.plcp == std::vector<std::int64_t>{3, 3, 2, 1});
        for (std::size_t i = 0; i < 4; ++i) CHECK(r.p[i] != static_cast<std::int64_t>(i));
    }
    {
        PlcpResult r = oracle::brute_plcp_hamming(encode_text("AB"), 0);
        CHECK(r.plcp == std::vector<std::int64_t>{0, 0});
        CHECK(r.p[0] == 1);
        CHECK(r.p[1] == 0);
    }
    {
        // one substitution makes any pair of distinct letters agree for 1
        PlcpResult r = oracle::brute_plcp_hamming(encode_text("AB"), 1);
        CHECK(r.plcp == std::vector<std::int64_t>{1, 1});
    }
}

TEST_CASE("edit reference on fixed fixtures") {
    {
        // S_{i,k} excludes both positions of a length-2 text when k = 1
        PlcpResult r = oracle::brute_plcp_edit(encode_text("AB"), 1);
        CHECK(r.plcp == std::vector<std::int64_t>{0, 0});
        CHECK(r.p == std::vector<std::int64_t>{no_witness, no_witness});
    }
    {
        PlcpResult r = oracle::brute_plcp_edit(encode_text("AAAA"), 1);
        CHECK(r.plcp[0] == 3); // suffix 2 "AA" plus one insertion covers "AAA"
        CHECK(r.p[0] >= 2);
    }
}

TEST_CASE("banded and full edit DP agree on random pairs") {
    Rng rng(83);
    for (int rep = 0; rep < 1000; ++rep) {
        std::size_t n = 2 + rng.below(80);
        Text t = random_text(n, 2 + static_cast<unsigned>(rng.below(3)), rng.next());
        std::span<const code_t> codes(t.codes);
        std::size_t i = rng.below(n), j = rng.below(n);
        int k = static_cast<int>(rng.below(4));
        CHECK(oracle::edit_lcp_banded(codes.subspan(i), codes.subspan(j), k) ==
              oracle::edit_lcp_full(codes.subspan(i), codes.subspan(j), k));
    }
}

TEST_CASE("edit_distance_banded equals a definitional distance check") {
    Rng rng(89);
    for (int rep = 0; rep < 1500; ++rep) {
        std::size_t len = rng.below(24);
        Text t = random_text(std::max<std::size_t>(2 * len, 2), 2, rng.next());
        std::span<const code_t> codes(t.codes);
        std::span<const code_t> a = codes.first(len);
        std::span<const code_t> b = codes.subspan(codes.size() - len);
        int k = static_cast<int>(rng.below(4));
        // full Wagner-Fischer, independently coded
        std::vector<std::vector<int>> d(len + 1, std::vector<int>(len + 1));
        for (std::size_t x = 0; x <= len; ++x) d[x][0] = static_cast<int>(x);
        for (std::size_t y = 0; y <= len; ++y) d[0][y] = static_cast<int>(y);
        for (std::size_t x = 1; x <= len; ++x)
            for (std::size_t y = 1; y <= len; ++y)
                d[x][y] = std::min({d[x - 1][y - 1] + (a[x - 1] == b[y - 1] ? 0 : 1),
                                    d[x - 1][y] + 1, d[x][y - 1] + 1});
        int full = d[len][len];
        int banded = oracle::edit_distance_banded(a, b, k);
        if (full <= k)
            CHECK(banded == full);
        else
            CHECK(banded > k);
    }
}

TEST_CASE("cross-sequence reference arrays on fixtures") {
    Text x = encode_text("AB"), y = encode_text("BA");
    CHECK(oracle::brute_lambda(x, y, 0, Model::Hamming) ==
          std::vector<std::int64_t>{1, 1});
    CHECK(oracle::brute_lambda(y, x, 0, Model::Hamming) ==
          std::vector<std::int64_t>{1, 1});
    // k = 1 does not help: both alignments of "AB" against "BA" need 2 fixes
    CHECK(oracle::brute_lambda(x, y, 1, Model::Hamming) ==
          std::vector<std::int64_t>{1, 1});
}

TEST_CASE("overlap reference on fixtures") {
    Alphabet abcd({'A', 'B', 'C', 'D'});
    Text a = encode_text("ABC", abcd), b = encode_text("BCD", abcd);
    CHECK(oracle::brute_overlap(a, b, 0, Model::Hamming) == 2);
    CHECK(oracle::brute_overlap(b, a, 0, Model::Hamming) == 0);
    CHECK(oracle::brute_overlap(a, a, 0, Model::Hamming) == 3);
    CHECK(oracle::brute_overlap(b, a, 1, Model::Hamming) == 1);
    CHECK(oracle::brute_overlap(a, b, 1, Model::Edit) == 2); // "ABC" vs "BCD" costs 2
}

TEST_CASE("hamming scan oracle is symmetric and monotone in k") {
    Rng rng(97);
    for (int rep = 0; rep < 500; ++rep) {
        std::size_t n = 2 + rng.below(60);
        Text t = random_text(n, 2, rng.next());
        std::span<const code_t> codes(t.codes);
        std::size_t i = rng.below(n), j = rng.below(n);
        std::size_t prev = 0;
        for (int k = 0; k <= 3; ++k) {
            std::size_t len = oracle::lcp_k_hamming(codes.subspan(i), codes.subspan(j), k);
            CHECK(len >= prev);
            CHECK(len == oracle::lcp_k_hamming(codes.subspan(j), codes.subspan(i), k));
            prev = len;
        }
    }
}
