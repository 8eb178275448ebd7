#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dnarabin/bitstring.hpp"
#include "dnarabin/dna.hpp"
#include "dnarabin/rabin.hpp"

namespace dnarabin {

/// Shared-secret marker character: printable, non-space ASCII (codes 33..126).
class SpyChar {
public:
    explicit SpyChar(char c);

    char ch() const { return c_; }
    int code() const { return static_cast<unsigned char>(c_); }
    std::string decimal() const { return std::to_string(code()); }

private:
    char c_;
};

struct CipherText {
    std::size_t block_width = 0;
    std::vector<BitString> blocks;  // one block per plaintext character

    bool operator==(const CipherText&) const = default;
};

/// Bit length of n rounded up to the next even number. Every value below n
/// fits in a block of this width.
std::size_t block_width_for(const RabinPublicKey& pk);

/// One unit per message byte: the decimal digits of the spy code followed by
/// the decimal digits of the byte code, read as one integer. Spy '*' (42)
/// before 'S' (83) gives 4283. No zero padding.
std::vector<Bigint> make_units(std::string_view message, SpyChar spy, const RabinPublicKey& pk);

/// Per character: square mod n, encode as a fixed-width block, XOR with the
/// matching slice of the DNA key bits, then one Feistel round.
CipherText encrypt_message(std::string_view message, SpyChar spy, const RabinPublicKey& pk,
                           const DnaSequence& key);

/// The unique root whose decimal form is the spy code followed by the
/// canonical decimal of a byte value. No match and multiple matches are
/// errors; the result is never a guess.
Bigint select_root(const RootSet& roots, SpyChar spy);

std::string decrypt_message(const CipherText& ct, SpyChar spy, const RabinPrivateKey& sk,
                            const DnaSequence& key);

}  // namespace dnarabin
