#pragma once

#include <string>
#include <string_view>

#include "dnarabin/bitstring.hpp"
#include "dnarabin/numtheory.hpp"

namespace dnarabin {

/// Validated sequence over the nucleotide alphabet {A, C, G, T}.
class DnaSequence {
public:
    DnaSequence() = default;

    /// Strict constructor: uppercase A/C/G/T only, error reports 1-based position.
    static DnaSequence from_string(std::string_view letters);

    std::size_t size() const { return seq_.size(); }
    bool empty() const { return seq_.empty(); }
    char operator[](std::size_t i) const { return seq_[i]; }
    const std::string& str() const { return seq_; }
    bool operator==(const DnaSequence&) const = default;

private:
    std::string seq_;
};

// The codec table is fixed: A=00, C=01, G=10, T=11.

BitString nt_to_bits(char nucleotide);
BitString dna_to_bits(const DnaSequence& s);
DnaSequence bits_to_dna(const BitString& bits);  // length must be even

/// One-time-pad sizing rule: block_width * message_length / 2 nucleotides.
std::size_t required_key_nucleotides(std::size_t message_length, std::size_t block_width);

/// Uniformly random key of exactly the required size, one 2-bit draw per
/// nucleotide.
DnaSequence gen_dna_key(std::size_t message_length, std::size_t block_width, RandomSource& rng);

/// Whitespace-tolerant, case-normalizing reader for key files; errors carry
/// line and column.
DnaSequence parse_dna_text(std::string_view text);

/// Key file layout: rows of 13 space-separated letters, LF line endings.
/// parse_dna_text reads it back.
std::string format_dna_key(const DnaSequence& key);

}  // namespace dnarabin
