#pragma once

#include <istream>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include "plcpk/alphabet.hpp"

namespace plcpk {

struct NamedSequence {
    std::string name;
    std::string raw;
};

/// FASTA: '>' header lines start records, sequence lines concatenate;
/// blank lines are skipped.
inline std::vector<NamedSequence> parse_fasta(std::istream& in) {
    std::vector<NamedSequence> records;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            std::string name = line.substr(1);
            std::size_t ws = name.find_first_of(" \t");
            if (ws != std::string::npos) name.resize(ws);
            if (name.empty()) throw input_error("FASTA header with empty name");
            records.push_back({name, ""});
        } else {
            if (records.empty())
                throw input_error("FASTA sequence data before the first '>' header");
            records.back().raw += line;
        }
    }
    if (records.empty()) throw input_error("no FASTA records found");
    for (const NamedSequence& r : records)
        if (r.raw.empty()) throw input_error("FASTA record '" + r.name + "' is empty");
    return records;
}

/// Raw format: the whole stream minus one trailing newline.
inline std::string read_raw(std::istream& in) {
    std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (!raw.empty() && raw.back() == '\n') raw.pop_back();
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) throw input_error("empty input");
    return raw;
}

/// DNA inputs get the fixed ACGT alphabet; anything else infers the
/// alphabet from the distinct symbols of all sequences together.
inline Alphabet detect_alphabet(const std::vector<std::string>& raws) {
    std::set<char> distinct;
    for (const std::string& r : raws) distinct.insert(r.begin(), r.end());
    bool dna = !distinct.empty();
    for (char c : distinct) dna = dna && (c == 'A' || c == 'C' || c == 'G' || c == 'T');
    if (dna) return Alphabet::dna();
    return Alphabet(std::vector<char>(distinct.begin(), distinct.end()));
}

} // namespace plcpk
