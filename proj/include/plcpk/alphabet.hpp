#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plcpk {

/// Raised for malformed or out-of-contract user input (CLI exit code 2).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

using code_t = std::uint8_t;

/// Ordered alphabet with code 0 reserved for the end-of-text sentinel.
/// Letters map to codes 1..sigma in sorted symbol order, so numeric order
/// of codes equals lexicographic order of symbols with the sentinel first.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::vector<char> letters) : letters_(std::move(letters)) {
        std::sort(letters_.begin(), letters_.end());
        letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
        if (letters_.empty())
            throw input_error("alphabet must contain at least 1 symbol");
        if (letters_.size() > 250)
            throw input_error("alphabet too large");
        code_of_.assign(256, 0);
        for (std::size_t i = 0; i < letters_.size(); ++i)
            code_of_[static_cast<unsigned char>(letters_[i])] = static_cast<code_t>(i + 1);
    }

    static Alphabet dna() { return Alphabet({'A', 'C', 'G', 'T'}); }

    static Alphabet infer(std::string_view raw) {
        std::set<char> distinct(raw.begin(), raw.end());
        return Alphabet(std::vector<char>(distinct.begin(), distinct.end()));
    }

    std::size_t sigma() const { return letters_.size(); }

    /// Bits per packed digit, sized for sigma letters plus the sentinel.
    unsigned bits_per_letter() const {
        unsigned bits = 1;
        while ((1u << bits) < letters_.size() + 1) ++bits;
        return bits;
    }

    bool contains(char c) const { return code_of_[static_cast<unsigned char>(c)] != 0; }

    code_t encode(char c) const {
        code_t v = code_of_[static_cast<unsigned char>(c)];
        if (v == 0) throw input_error(std::string("symbol not in alphabet: '") + c + "'");
        return v;
    }

    char decode(code_t code) const {
        if (code == 0 || code > letters_.size())
            throw std::out_of_range("letter code out of range");
        return letters_[code - 1];
    }

    bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }

private:
    std::vector<char> letters_;
    std::vector<code_t> code_of_;
};

/// Encoded input string; codes are in [1, sigma], never the sentinel 0.
struct Text {
    std::vector<code_t> codes;
    Alphabet alphabet;

    std::size_t size() const { return codes.size(); }
    code_t operator[](std::size_t i) const { return codes[i]; }

    std::string decoded() const {
        std::string out;
        out.reserve(codes.size());
        for (code_t c : codes) out.push_back(alphabet.decode(c));
        return out;
    }
};

inline Text encode_text(std::string_view raw, const Alphabet& alphabet) {
    if (raw.empty()) throw input_error("empty input: text must have length >= 1");
    Text t;
    t.alphabet = alphabet;
    t.codes.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!alphabet.contains(raw[i]))
            throw input_error("symbol outside alphabet at index " + std::to_string(i) +
                              ": '" + raw[i] + "'");
        t.codes.push_back(alphabet.encode(raw[i]));
    }
    return t;
}

inline Text encode_text(std::string_view raw) {
    if (raw.empty()) throw input_error("empty input: text must have length >= 1");
    return encode_text(raw, Alphabet::infer(raw));
}

} // namespace plcpk
