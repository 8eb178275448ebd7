#include "dnarabin/dna.hpp"

#include <algorithm>

namespace dnarabin {

namespace {

constexpr char kAlphabet[] = "ACGT";

int nt_index(char c) {
    switch (c) {
        case 'A': return 0;
        case 'C': return 1;
        case 'G': return 2;
        case 'T': return 3;
        default: return -1;
    }
}

}  // namespace

DnaSequence DnaSequence::from_string(std::string_view letters) {
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (nt_index(letters[i]) < 0)
            fail(Errc::invalid_nucleotide, std::string("invalid nucleotide '") + letters[i] +
                                               "' at position " + std::to_string(i + 1));
    }
    DnaSequence s;
    s.seq_.assign(letters);
    return s;
}

BitString nt_to_bits(char nucleotide) {
    const int v = nt_index(nucleotide);
    if (v < 0)
        fail(Errc::invalid_nucleotide, std::string("invalid nucleotide '") + nucleotide + "'");
    BitString b;
    b.push_back(v >> 1);
    b.push_back(v & 1);
    return b;
}

BitString dna_to_bits(const DnaSequence& s) {
    BitString b;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const int v = nt_index(s[i]);
        b.push_back(v >> 1);
        b.push_back(v & 1);
    }
    return b;
}

DnaSequence bits_to_dna(const BitString& bits) {
    if (bits.size() % 2 != 0)
        fail(Errc::odd_length, "bit string of odd length " + std::to_string(bits.size()) +
                                   " has no nucleotide form");
    std::string out;
    out.reserve(bits.size() / 2);
    for (std::size_t i = 0; i < bits.size(); i += 2) {
        out.push_back(kAlphabet[bits.bit(i) * 2 + bits.bit(i + 1)]);
    }
    return DnaSequence::from_string(out);
}

std::size_t required_key_nucleotides(std::size_t message_length, std::size_t block_width) {
    if (block_width % 2 != 0)
        fail(Errc::odd_block_width, "block width " + std::to_string(block_width) + " is odd");
    if (block_width < 4)
        fail(Errc::invalid_argument, "block width must be at least 4");
    return block_width * message_length / 2;
}

DnaSequence gen_dna_key(std::size_t message_length, std::size_t block_width, RandomSource& rng) {
    const std::size_t count = required_key_nucleotides(message_length, block_width);
    std::string out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(kAlphabet[rng.next_u64() & 3]);
    }
    return DnaSequence::from_string(out);
}

DnaSequence parse_dna_text(std::string_view text) {
    std::string out;
    std::size_t line = 1;
    std::size_t column = 0;
    for (const char ch : text) {
        if (ch == '\n') {
            ++line;
            column = 0;
            continue;
        }
        ++column;
        if (ch == ' ' || ch == '\t' || ch == '\r') continue;
        const char upper = (ch >= 'a' && ch <= 'z') ? static_cast<char>(ch - 'a' + 'A') : ch;
        if (nt_index(upper) < 0)
            fail(Errc::invalid_nucleotide, std::string("invalid nucleotide '") + ch + "' at line " +
                                               std::to_string(line) + ", column " +
                                               std::to_string(column));
        out.push_back(upper);
    }
    return DnaSequence::from_string(out);
}

std::string format_dna_key(const DnaSequence& key) {
    std::string out;
    std::size_t i = 0;
    while (i < key.size()) {
        const std::size_t row_end = std::min(i + 13, key.size());
        for (std::size_t j = i; j < row_end; ++j) {
            if (j > i) out.push_back(' ');
            out.push_back(key[j]);
        }
        out.push_back('\n');
        i = row_end;
    }
    return out;
}

}  // namespace dnarabin
