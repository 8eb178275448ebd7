#include "dnarabin/pipeline.hpp"

#include <string>

#include "dnarabin/feistel.hpp"

namespace dnarabin {

SpyChar::SpyChar(char c) : c_(c) {
    const int code = static_cast<unsigned char>(c);
    if (code < 33 || code > 126)
        fail(Errc::invalid_argument,
             "spy must be a printable non-space ASCII character, got code " + std::to_string(code));
}

std::size_t block_width_for(const RabinPublicKey& pk) {
    if (pk.n < 2) fail(Errc::invalid_argument, "modulus must be at least 2");
    const std::size_t bits = bit_length(pk.n);
    return bits + bits % 2;
}

std::vector<Bigint> make_units(std::string_view message, SpyChar spy, const RabinPublicKey& pk) {
    const std::string prefix = spy.decimal();
    std::vector<Bigint> units;
    units.reserve(message.size());
    for (std::size_t i = 0; i < message.size(); ++i) {
        const unsigned code = static_cast<unsigned char>(message[i]);
        const Bigint unit(prefix + std::to_string(code));
        if (unit >= pk.n)
            fail(Errc::unit_overflow, "character " + std::to_string(i + 1) + ": unit " +
                                          unit.str() + " >= modulus " + pk.n.str() +
                                          " (modulus too small for this spy and charset)");
        units.push_back(unit);
    }
    return units;
}

CipherText encrypt_message(std::string_view message, SpyChar spy, const RabinPublicKey& pk,
                           const DnaSequence& key) {
    const std::size_t width = block_width_for(pk);
    const std::size_t needed = required_key_nucleotides(message.size(), width);
    if (key.size() != needed)
        fail(Errc::key_length_mismatch, "DNA key has " + std::to_string(key.size()) +
                                            " nucleotides, this message needs exactly " +
                                            std::to_string(needed));
    const std::vector<Bigint> units = make_units(message, spy, pk);
    const BitString key_bits = dna_to_bits(key);

    CipherText ct{width, {}};
    ct.blocks.reserve(units.size());
    for (std::size_t i = 0; i < units.size(); ++i) {
        const Bigint cipher = encrypt(units[i], pk);
        const BitString block = BitString::from_integer(cipher, width);
        ct.blocks.push_back(f_round(block ^ key_bits.slice(i * width, width)));
    }
    return ct;
}

Bigint select_root(const RootSet& roots, SpyChar spy) {
    const std::string prefix = spy.decimal();
    std::vector<Bigint> matches;
    for (const Bigint& root : roots.distinct()) {
        const std::string digits = root.str();
        if (digits.size() <= prefix.size() || digits.compare(0, prefix.size(), prefix) != 0)
            continue;
        const std::string suffix = digits.substr(prefix.size());
        // The suffix must be the canonical decimal of a byte value, exactly
        // what unit construction appends.
        if (suffix.size() > 3) continue;
        if (suffix.size() > 1 && suffix[0] == '0') continue;
        if (std::stoi(suffix) > 255) continue;
        matches.push_back(root);
    }
    if (matches.empty())
        fail(Errc::no_spy_match,
             "no root starts with spy code " + prefix + " (wrong key or corrupted block)");
    if (matches.size() > 1) {
        std::string list;
        for (const Bigint& m : matches) list += (list.empty() ? "" : ", ") + m.str();
        fail(Errc::ambiguous_roots, "several roots carry the spy prefix: " + list);
    }
    return matches.front();
}

std::string decrypt_message(const CipherText& ct, SpyChar spy, const RabinPrivateKey& sk,
                            const DnaSequence& key) {
    const RabinPublicKey pk = sk.public_key();
    const std::size_t width = block_width_for(pk);
    if (ct.block_width != width)
        fail(Errc::invalid_argument, "ciphertext block width " + std::to_string(ct.block_width) +
                                         " does not match this key's width " +
                                         std::to_string(width));
    for (const BitString& block : ct.blocks) {
        if (block.size() != ct.block_width)
            fail(Errc::invalid_argument, "ciphertext block of width " +
                                             std::to_string(block.size()) + " in a " +
                                             std::to_string(ct.block_width) + "-wide stream");
    }
    const std::size_t needed = required_key_nucleotides(ct.blocks.size(), width);
    if (key.size() != needed)
        fail(Errc::key_length_mismatch, "DNA key has " + std::to_string(key.size()) +
                                            " nucleotides, this ciphertext needs exactly " +
                                            std::to_string(needed));
    const BitString key_bits = dna_to_bits(key);
    const std::string prefix = spy.decimal();

    std::string message;
    message.reserve(ct.blocks.size());
    for (std::size_t i = 0; i < ct.blocks.size(); ++i) {
        try {
            const BitString rabin_block =
                f_inverse(ct.blocks[i]) ^ key_bits.slice(i * width, width);
            const Bigint cipher = rabin_block.to_integer();
            if (cipher >= pk.n)
                fail(Errc::message_too_large,
                     "cipher value " + cipher.str() + " >= modulus " + pk.n.str());
            const Bigint unit = select_root(decrypt_roots(cipher, sk), spy);
            const std::string digits = unit.str();
            message.push_back(static_cast<char>(std::stoi(digits.substr(prefix.size()))));
        } catch (const Error& e) {
            fail(e.code(), "block " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return message;
}

}  // namespace dnarabin
