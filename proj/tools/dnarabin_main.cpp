#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dnarabin/dna.hpp"
#include "dnarabin/keyfiles.hpp"
#include "dnarabin/pipeline.hpp"
#include "dnarabin/rabin.hpp"
#include "dnarabin/vectors.hpp"

namespace {

using namespace dnarabin;

// --seed beats the DNARABIN_SEED environment variable beats OS entropy.
RandomSource make_rng(const std::optional<std::uint64_t>& seed_flag) {
    if (seed_flag) return RandomSource(*seed_flag);
    if (const char* env = std::getenv("DNARABIN_SEED")) {
        try {
            std::size_t used = 0;
            const std::uint64_t seed = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
            return RandomSource(seed);
        } catch (const std::exception&) {
            fail(Errc::parse_error,
                 std::string("DNARABIN_SEED=\"") + env + "\" is not a 64-bit unsigned integer");
        }
    }
    return RandomSource();
}

SpyChar parse_spy(const std::string& text) {
    if (text.size() != 1)
        fail(Errc::invalid_argument, "--spy takes exactly one printable ASCII character");
    return SpyChar(text[0]);
}

Bigint parse_prime_flag(const char* flag, const std::string& text) {
    if (text.empty()) fail(Errc::parse_error, std::string(flag) + " is empty");
    for (const char ch : text) {
        if (ch < '0' || ch > '9')
            fail(Errc::parse_error,
                 std::string(flag) + "=\"" + text + "\" is not a decimal integer");
    }
    return Bigint(text);
}

struct KeygenOptions {
    std::size_t bits = 0;
    std::optional<std::uint64_t> seed;
    std::string fixed_p, fixed_q;
    std::string pub_path, priv_path;
};

int run_keygen(const KeygenOptions& opt) {
    RabinKeyPair pair = [&] {
        if (!opt.fixed_p.empty())
            return keypair_from_primes(parse_prime_flag("--p", opt.fixed_p),
                                       parse_prime_flag("--q", opt.fixed_q));
        RandomSource rng = make_rng(opt.seed);
        return keygen(opt.bits, rng);
    }();
    write_public_key_file(opt.pub_path, pair.pub);
    write_private_key_file(opt.priv_path, pair.priv);
    std::cout << "modulus bits: " << bit_length(pair.pub.n) << "\n"
              << "block width: " << block_width_for(pair.pub) << "\n";
    if (bit_length(pair.pub.n) <= 128)
        std::cerr << "warning: modulus is below 2^128; this key is insecure, demo use only\n";
    return 0;
}

struct DnakeyOptions {
    std::optional<std::size_t> length;
    std::string message_path;
    std::optional<std::size_t> block_width;
    std::string pub_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

int run_dnakey(const DnakeyOptions& opt) {
    std::size_t length = 0;
    if (opt.length) {
        length = *opt.length;
    } else if (!opt.message_path.empty()) {
        length = read_binary_file(opt.message_path).size();
    } else {
        fail(Errc::invalid_argument, "pass --length or --message-file");
    }
    std::size_t width = 0;
    if (opt.block_width) {
        width = *opt.block_width;
    } else if (!opt.pub_path.empty()) {
        width = block_width_for(read_public_key_file(opt.pub_path));
    } else {
        fail(Errc::invalid_argument, "pass --block-width or --pub");
    }
    RandomSource rng = make_rng(opt.seed);
    const DnaSequence key = gen_dna_key(length, width, rng);
    write_dna_key_file(opt.out_path, key);
    std::cout << "wrote " << key.size() << " nucleotides\n";
    return 0;
}

struct CryptOptions {
    std::string in_path, key_path, dna_path, out_path;
    std::string spy;
};

int run_encrypt(const CryptOptions& opt) {
    const RabinPublicKey pk = read_public_key_file(opt.key_path);
    const DnaSequence key = read_dna_key_file(opt.dna_path);
    const std::string message = read_binary_file(opt.in_path);
    const CipherText ct = encrypt_message(message, parse_spy(opt.spy), pk, key);
    write_ciphertext_file(opt.out_path, ct);
    std::cout << "wrote " << ct.blocks.size() << " blocks of width " << ct.block_width << "\n";
    return 0;
}

int run_decrypt(const CryptOptions& opt) {
    const RabinPrivateKey sk = read_private_key_file(opt.key_path);
    const DnaSequence key = read_dna_key_file(opt.dna_path);
    const CipherText ct = read_ciphertext_file(opt.in_path);
    const std::string message = decrypt_message(ct, parse_spy(opt.spy), sk, key);
    write_binary_file(opt.out_path, message);
    std::cout << "wrote " << message.size() << " bytes\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid cryptosystem: Rabin squaring under a DNA one-time pad with a Feistel reorder"};
    app.require_subcommand(1);

    KeygenOptions keygen_opt;
    CLI::App* keygen_cmd = app.add_subcommand("keygen", "generate a Rabin key pair");
    CLI::Option* bits_opt =
        keygen_cmd->add_option("--bits", keygen_opt.bits, "bits per prime (>= 4)");
    keygen_cmd->add_option("--seed", keygen_opt.seed, "64-bit RNG seed");
    CLI::Option* p_opt =
        keygen_cmd->add_option("--p", keygen_opt.fixed_p, "fixed prime p (testing)");
    CLI::Option* q_opt =
        keygen_cmd->add_option("--q", keygen_opt.fixed_q, "fixed prime q (testing)");
    p_opt->needs(q_opt);
    q_opt->needs(p_opt);
    p_opt->excludes(bits_opt);
    keygen_cmd->add_option("--pub", keygen_opt.pub_path, "public key output path")->required();
    keygen_cmd->add_option("--priv", keygen_opt.priv_path, "private key output path")->required();

    DnakeyOptions dnakey_opt;
    CLI::App* dnakey_cmd = app.add_subcommand("dnakey", "generate a DNA one-time-pad key");
    CLI::Option* length_opt =
        dnakey_cmd->add_option("--length", dnakey_opt.length, "message length in bytes");
    CLI::Option* msgfile_opt = dnakey_cmd->add_option("--message-file", dnakey_opt.message_path,
                                                      "size the key for this message file");
    length_opt->excludes(msgfile_opt);
    msgfile_opt->excludes(length_opt);
    CLI::Option* width_opt =
        dnakey_cmd->add_option("--block-width", dnakey_opt.block_width, "even block width");
    CLI::Option* pub_opt = dnakey_cmd->add_option("--pub", dnakey_opt.pub_path,
                                                  "derive the block width from this public key");
    width_opt->excludes(pub_opt);
    pub_opt->excludes(width_opt);
    dnakey_cmd->add_option("--seed", dnakey_opt.seed, "64-bit RNG seed");
    dnakey_cmd->add_option("--out", dnakey_opt.out_path, "key output path")->required();

    CryptOptions encrypt_opt;
    CLI::App* encrypt_cmd = app.add_subcommand("encrypt", "encrypt a message file");
    encrypt_cmd->add_option("--in", encrypt_opt.in_path, "message file")->required();
    encrypt_cmd->add_option("--pub", encrypt_opt.key_path, "public key file")->required();
    encrypt_cmd->add_option("--dna", encrypt_opt.dna_path, "DNA key file")->required();
    encrypt_cmd->add_option("--spy", encrypt_opt.spy, "shared spy character")->required();
    encrypt_cmd->add_option("--out", encrypt_opt.out_path, "ciphertext output path")->required();

    CryptOptions decrypt_opt;
    CLI::App* decrypt_cmd = app.add_subcommand("decrypt", "decrypt a ciphertext file");
    decrypt_cmd->add_option("--in", decrypt_opt.in_path, "ciphertext file")->required();
    decrypt_cmd->add_option("--priv", decrypt_opt.key_path, "private key file")->required();
    decrypt_cmd->add_option("--dna", decrypt_opt.dna_path, "DNA key file")->required();
    decrypt_cmd->add_option("--spy", decrypt_opt.spy, "shared spy character")->required();
    decrypt_cmd->add_option("--out", decrypt_opt.out_path, "plaintext output path")->required();

    CLI::App* vectors_cmd =
        app.add_subcommand("vectors", "run the built-in self-test vectors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "error: Usage: " << e.what() << "\n";
        return 1;
    }

    try {
        if (keygen_cmd->parsed()) {
            if (keygen_opt.fixed_p.empty() && keygen_opt.bits < 4)
                fail(Errc::invalid_argument, "pass --bits (>= 4) or fixed --p/--q");
            return run_keygen(keygen_opt);
        }
        if (dnakey_cmd->parsed()) return run_dnakey(dnakey_opt);
        if (encrypt_cmd->parsed()) return run_encrypt(encrypt_opt);
        if (decrypt_cmd->parsed()) return run_decrypt(decrypt_opt);
        if (vectors_cmd->parsed()) return report_builtin_vectors(std::cout) ? 0 : 1;
    } catch (const dnarabin::Error& e) {
        std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
