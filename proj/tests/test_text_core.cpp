#include "doctest.h"
#include "plcpk/alphabet.hpp"

using namespace plcpk;

TEST_CASE("alphabet assigns codes in sorted symbol order") {
    Alphabet a({'G', 'A', 'T', 'C'});
    CHECK(a.sigma() == 4);
    CHECK(a.encode('A') == 1);
    CHECK(a.encode('C') == 2);
    CHECK(a.encode('G') == 3);
    CHECK(a.encode('T') == 4);
    CHECK(a.decode(3) == 'G');
    CHECK(a == Alphabet::dna());
}

TEST_CASE("alphabet deduplicates and validates") {
    Alphabet a({'B', 'A', 'B', 'A'});
    CHECK(a.sigma() == 2);
    CHECK_THROWS_AS(Alphabet(std::vector<char>{}), input_error);
}

TEST_CASE("single-letter alphabet is allowed") {
    Alphabet a({'X'});
    CHECK(a.sigma() == 1);
    CHECK(a.bits_per_letter() == 1); // one letter plus the sentinel
}

TEST_CASE("bits per letter covers sigma plus the sentinel") {
    CHECK(Alphabet({'A'}).bits_per_letter() == 1);
    CHECK(Alphabet::dna().bits_per_letter() == 3); // 4 letters + sentinel = 5 values
    std::vector<char> seven;
    for (char c = 'a'; c < 'a' + 7; ++c) seven.push_back(c);
    CHECK(Alphabet(seven).bits_per_letter() == 3);
    std::vector<char> eight = seven;
    eight.push_back('z');
    CHECK(Alphabet(eight).bits_per_letter() == 4);
}

TEST_CASE("encode_text maps symbols and reports offenders") {
    Text t = encode_text("ACGT", Alphabet::dna());
    CHECK(t.size() == 4);
    CHECK(t[0] == 1);
    CHECK(t[3] == 4);
    CHECK(t.decoded() == "ACGT");
    CHECK_THROWS_AS(encode_text("ACGX", Alphabet::dna()), input_error);
    CHECK_THROWS_AS(encode_text("", Alphabet::dna()), input_error);
}

TEST_CASE("inferred alphabet covers exactly the distinct symbols") {
    Text t = encode_text("banana");
    CHECK(t.alphabet.sigma() == 3); // a, b, n
    CHECK(t.alphabet.encode('a') == 1);
    CHECK(t.alphabet.encode('b') == 2);
    CHECK(t.alphabet.encode('n') == 3);
    CHECK(t.decoded() == "banana");
}

TEST_CASE("code order equals lexicographic symbol order with sentinel first") {
    Alphabet a = Alphabet::infer("zaq");
    for (char x : {'a', 'q', 'z'})
        for (char y : {'a', 'q', 'z'})
            CHECK((x < y) == (a.encode(x) < a.encode(y)));
    CHECK(a.encode('a') > 0); // sentinel 0 sorts before every letter
}
