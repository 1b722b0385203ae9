#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "plcpk/alphabet.hpp"

namespace plcpk {

/// A lambda-gram packed into machine words as a lambda-digit number,
/// most significant digit first. Digits past len are the sentinel 0,
/// so numeric word order equals lexicographic order of the padded
/// letter sequences (end-of-text sorts before every letter).
struct PackedGram {
    static constexpr std::size_t max_words = 8;

    std::array<std::uint64_t, max_words> words{};
    std::uint32_t n_words = 0;
    std::uint32_t len = 0; // valid (non-sentinel) letters

    friend bool operator==(const PackedGram& a, const PackedGram& b) {
        if (a.n_words != b.n_words) return false;
        for (std::uint32_t w = 0; w < a.n_words; ++w)
            if (a.words[w] != b.words[w]) return false;
        return true;
    }

    friend std::strong_ordering operator<=>(const PackedGram& a, const PackedGram& b) {
        for (std::uint32_t w = 0; w < a.n_words && w < b.n_words; ++w)
            if (a.words[w] != b.words[w]) return a.words[w] <=> b.words[w];
        return a.n_words <=> b.n_words;
    }
};

/// Fixed packing geometry for one (alphabet, lambda) pair.
class GramCodec {
public:
    GramCodec() = default;

    GramCodec(unsigned bits_per_letter, std::size_t lambda)
        : bits_(bits_per_letter), lambda_(lambda) {
        if (bits_ == 0 || bits_ > 32) throw input_error("unsupported bits per letter");
        digits_per_word_ = 64 / bits_;
        n_words_ = static_cast<std::uint32_t>((lambda_ + digits_per_word_ - 1) / digits_per_word_);
        if (n_words_ > PackedGram::max_words)
            throw input_error("lambda does not fit the word-packing scheme for this alphabet");
    }

    unsigned bits_per_letter() const { return bits_; }
    std::size_t lambda() const { return lambda_; }
    unsigned used_bits_per_word() const { return static_cast<unsigned>(digits_per_word_ * bits_); }
    std::uint32_t n_words() const { return n_words_; }
    bool single_word() const { return n_words_ == 1; }

    /// Pack digits[0..lambda) given as letter codes (0 allowed as padding).
    PackedGram pack_digits(std::span<const code_t> digits, std::size_t valid_len) const {
        PackedGram g;
        g.n_words = n_words_;
        g.len = static_cast<std::uint32_t>(valid_len);
        for (std::size_t t = 0; t < lambda_; ++t) {
            code_t d = t < digits.size() ? digits[t] : code_t{0};
            std::size_t w = t / digits_per_word_;
            std::size_t slot = t % digits_per_word_;
            unsigned shift = static_cast<unsigned>((digits_per_word_ - 1 - slot) * bits_);
            g.words[w] |= static_cast<std::uint64_t>(d) << shift;
        }
        return g;
    }

    /// Gram for x[i .. min(i+lambda, n)-1], sentinel-padded past the end.
    PackedGram pack(const Text& text, std::size_t i) const {
        const std::size_t n = text.size();
        if (i >= n) throw std::out_of_range("pack_gram: position past end of text");
        std::size_t valid = std::min(lambda_, n - i);
        return pack_digits(std::span<const code_t>(text.codes.data() + i, valid), valid);
    }

    code_t digit(const PackedGram& g, std::size_t t) const {
        std::size_t w = t / digits_per_word_;
        std::size_t slot = t % digits_per_word_;
        unsigned shift = static_cast<unsigned>((digits_per_word_ - 1 - slot) * bits_);
        return static_cast<code_t>((g.words[w] >> shift) & ((1u << bits_) - 1));
    }

    /// Agreeing digits within one word given its nonzero XOR.
    std::size_t word_agreement(std::uint64_t diff) const {
        unsigned delta = 63 - static_cast<unsigned>(std::countl_zero(diff));
        // floor((D*b - delta - 1) / b) agreeing digits inside this word
        return (digits_per_word_ * bits_ - delta - 1) / bits_;
    }

    /// Leading letters on which the two grams agree; constant time per word
    /// via XOR and the index of the most significant set bit.
    std::size_t xor_lcp(const PackedGram& a, const PackedGram& b) const {
        for (std::uint32_t w = 0; w < n_words_; ++w) {
            std::uint64_t d = a.words[w] ^ b.words[w];
            if (d != 0) return w * digits_per_word_ + word_agreement(d);
        }
        return std::min(a.len, b.len);
    }

private:
    unsigned bits_ = 0;
    std::size_t lambda_ = 0;
    std::size_t digits_per_word_ = 0;
    std::uint32_t n_words_ = 0;
};

inline PackedGram pack_gram(const Text& text, std::size_t i, std::size_t lambda) {
    return GramCodec(text.alphabet.bits_per_letter(), lambda).pack(text, i);
}

} // namespace plcpk
