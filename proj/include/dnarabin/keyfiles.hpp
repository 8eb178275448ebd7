#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dnarabin/dna.hpp"
#include "dnarabin/pipeline.hpp"
#include "dnarabin/rabin.hpp"

namespace dnarabin {

// Plain-text, line-oriented file formats with LF endings:
//
//   public key    line 1: "RABIN-PUB 1"    line 2: decimal n
//   private key   line 1: "RABIN-PRIV 1"   lines 2-3: decimal p, q
//   DNA key       nucleotide letters with arbitrary whitespace
//   ciphertext    line 1: "DNAOTP-CT 1 <block_width> <block_count>"
//                 then one line of exactly block_width '0'/'1' chars per block
//
// The spy character never appears in any file.

void write_public_key_file(const std::filesystem::path& path, const RabinPublicKey& pk);
RabinPublicKey read_public_key_file(const std::filesystem::path& path);

void write_private_key_file(const std::filesystem::path& path, const RabinPrivateKey& sk);
RabinPrivateKey read_private_key_file(const std::filesystem::path& path);

void write_dna_key_file(const std::filesystem::path& path, const DnaSequence& key);
DnaSequence read_dna_key_file(const std::filesystem::path& path);

void write_ciphertext_file(const std::filesystem::path& path, const CipherText& ct);
CipherText read_ciphertext_file(const std::filesystem::path& path);

std::string read_binary_file(const std::filesystem::path& path);
void write_binary_file(const std::filesystem::path& path, std::string_view content);

}  // namespace dnarabin
