#include "dnarabin/vectors.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "dnarabin/dna.hpp"
#include "dnarabin/feistel.hpp"
#include "dnarabin/numtheory.hpp"
#include "dnarabin/pipeline.hpp"
#include "dnarabin/rabin.hpp"

namespace dnarabin {

namespace {

// 91-nucleotide one-time-pad key of the end-to-end demo, 13 per row.
constexpr const char* kDemoKey =
    "GTTTGGGGTTCCA"
    "ATCCATTTAGATC"
    "ACCCGCCGGGGTT"
    "GCCTTACGACAGA"
    "ATTTATAAACTGC"
    "AGCTTTACATTAC"
    "TAATCCGCTTCTG";

constexpr const char* kDemoCipherRows[7] = {
    "00011010011011110000000111", "00110100010001010110000011", "11010010101101000000110100",
    "11000101100010001010011001", "01010000111001100011110010", "00011000001001001001100010",
    "00000001010110110111011000"};

const long kDemoUnits[7] = {4283, 42117, 4299, 4299, 42101, 42115, 42115};
const long kDemoSquares[7] = {18344089, 45455877, 18481401, 18481401,
                              44108389, 45287413, 45287413};

template <typename T>
std::string show(const T& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

template <typename A, typename E>
std::string expect_eq(const A& actual, const E& expected) {
    if (show(actual) == show(expected)) return "";
    return "expected " + show(expected) + ", got " + show(actual);
}

std::string expect_true(bool condition, const std::string& detail) {
    return condition ? "" : detail;
}

using CheckFn = std::function<std::string()>;

void add(std::vector<VectorCheck>& out, const std::string& name, const CheckFn& fn) {
    try {
        const std::string detail = fn();
        out.push_back({name, detail.empty(), detail});
    } catch (const std::exception& e) {
        out.push_back({name, false, e.what()});
    }
}

std::string show_roots(const RootSet& roots) {
    std::string s;
    for (const Bigint& r : roots.distinct()) s += (s.empty() ? "" : " ") + r.str();
    return s;
}

}  // namespace

std::vector<VectorCheck> run_builtin_vectors() {
    std::vector<VectorCheck> out;

    // Background example: p=167, q=127, one byte 'H' with duplication padding.
    add(out, "modulus 167 * 127", [] {
        return expect_eq(keypair_from_primes(167, 127).pub.n, 21209);
    });
    add(out, "duplication encoding of 'H'", [] { return expect_eq(duplication_encode(72), 9288); });
    add(out, "square cipher of 9288 mod 21209", [] {
        return expect_eq(encrypt(9288, RabinPublicKey{21209}), 9941);
    });
    add(out, "bezout pair of (167, 127)", [] {
        const EgcdResult e = extended_gcd(167, 127);
        return expect_true(e.g == 1 && e.x == 54 && e.y == -71,
                           "expected (1, 54, -71), got (" + e.g.str() + ", " + e.x.str() + ", " +
                               e.y.str() + ")");
    });
    add(out, "root exponentiation mod 167", [] { return expect_eq(mod_pow(9941, 42, 167), 64); });
    add(out, "root exponentiation mod 127", [] { return expect_eq(mod_pow(9941, 32, 127), 17); });
    add(out, "four roots of 9941", [] {
        const RootSet roots = decrypt_roots(9941, RabinPrivateKey{167, 127});
        return expect_eq(show_roots(roots), "398 9288 11921 20811");
    });
    add(out, "duplication check filters the roots", [] {
        if (duplication_check(9288) != 72U) return std::string("9288 should decode to 72");
        for (const long reject : {398L, 11921L, 20811L}) {
            if (duplication_check(reject).has_value())
                return std::to_string(reject) + " should be rejected";
        }
        return std::string();
    });
    add(out, "primality of the demo primes", [] {
        RandomSource rng(1);
        for (const long prime : {167L, 127L, 6911L, 6947L}) {
            if (!is_probable_prime(prime, 40, rng))
                return std::to_string(prime) + " should test prime";
        }
        return expect_true(!is_probable_prime(21209, 40, rng), "21209 should test composite");
    });

    // End-to-end example: p=6911, q=6947, spy '*', message "Success".
    const RabinKeyPair demo = keypair_from_primes(6911, 6947);
    const DnaSequence demo_key = DnaSequence::from_string(kDemoKey);
    const SpyChar spy('*');

    add(out, "demo modulus 6911 * 6947", [&] { return expect_eq(demo.pub.n, 48010717); });
    add(out, "block width of the demo modulus", [&] {
        return expect_eq(block_width_for(demo.pub), 26);
    });
    add(out, "nucleotide codec table", [] {
        const char* codes[4] = {"00", "01", "10", "11"};
        const char letters[4] = {'A', 'C', 'G', 'T'};
        for (int i = 0; i < 4; ++i) {
            if (nt_to_bits(letters[i]).to_string() != codes[i])
                return std::string(1, letters[i]) + " should code as " + codes[i];
        }
        return expect_eq(dna_to_bits(DnaSequence::from_string("ACGT")).to_string(), "00011011");
    });
    add(out, "key bits of the first six nucleotides", [&] {
        const DnaSequence head = DnaSequence::from_string("GTTTGG");
        const std::string bits = dna_to_bits(head).to_string();
        if (bits != "101111111010") return "expected 101111111010, got " + bits;
        return expect_true(bits_to_dna(dna_to_bits(head)) == head, "codec must invert itself");
    });
    add(out, "one-time-pad sizing rule", [] {
        if (required_key_nucleotides(7, 26) != 91) return std::string("(7, 26) should give 91");
        if (required_key_nucleotides(10, 26) != 130) return std::string("(10, 26) should give 130");
        return std::string();
    });
    add(out, "keyspace of a 10-character key", [] {
        const Bigint combinations = Bigint(1) << (2 * 130);
        Bigint four_pow = 1;
        for (int i = 0; i < 130; ++i) four_pow *= 4;
        return expect_true(four_pow == combinations, "4^130 must equal 2^260");
    });
    add(out, "message units of \"Success\"", [&] {
        const std::vector<Bigint> units = make_units("Success", spy, demo.pub);
        for (int i = 0; i < 7; ++i) {
            if (units[static_cast<std::size_t>(i)] != kDemoUnits[i])
                return "unit " + std::to_string(i + 1) + ": expected " +
                       std::to_string(kDemoUnits[i]);
        }
        return std::string();
    });
    add(out, "square ciphers of the units", [&] {
        for (int i = 0; i < 7; ++i) {
            if (encrypt(kDemoUnits[i], demo.pub) != kDemoSquares[i])
                return "cipher " + std::to_string(i + 1) + ": expected " +
                       std::to_string(kDemoSquares[i]);
        }
        return std::string();
    });
    add(out, "feistel round on the first block", [] {
        const BitString in = BitString::from_string("11111010010100001101001101");
        return expect_eq(f_round(in).to_string(), "00011010011011110000000111");
    });
    add(out, "feistel inverse on the first block", [] {
        const BitString in = BitString::from_string("00011010011011110000000111");
        return expect_eq(f_inverse(in).to_string(), "11111010010100001101001101");
    });
    add(out, "end-to-end encryption of \"Success\"", [&] {
        const CipherText ct = encrypt_message("Success", spy, demo.pub, demo_key);
        if (ct.block_width != 26) return std::string("block width should be 26");
        for (std::size_t i = 0; i < 7; ++i) {
            if (ct.blocks[i].to_string() != kDemoCipherRows[i])
                return "block " + std::to_string(i + 1) + ": expected " +
                       std::string(kDemoCipherRows[i]) + ", got " + ct.blocks[i].to_string();
        }
        return std::string();
    });
    add(out, "root table of the first cipher", [&] {
        const RootSet roots = decrypt_roots(18344089, demo.priv);
        return expect_eq(show_roots(roots), "4283 1018545 46992172 48006434");
    });
    add(out, "spy selection on the first cipher", [&] {
        return expect_eq(select_root(decrypt_roots(18344089, demo.priv), spy), 4283);
    });
    add(out, "spy selection on the fifth cipher", [&] {
        return expect_eq(select_root(decrypt_roots(44108389, demo.priv), spy), 42101);
    });
    add(out, "end-to-end decryption of the ciphertext", [&] {
        CipherText ct{26, {}};
        for (const char* row : kDemoCipherRows) ct.blocks.push_back(BitString::from_string(row));
        return expect_eq(decrypt_message(ct, spy, demo.priv, demo_key), "Success");
    });
    add(out, "chosen-ciphertext attack on 21209", [] {
        RandomSource rng(7);
        const CcaResult r =
            cca_factor(honest_oracle(RabinPrivateKey{167, 127}), RabinPublicKey{21209}, rng, 64);
        return expect_true(r.p == 127 && r.q == 167, "expected factors 127 and 167, got " +
                                                         r.p.str() + " and " + r.q.str());
    });

    return out;
}

bool report_builtin_vectors(std::ostream& out) {
    const std::vector<VectorCheck> checks = run_builtin_vectors();
    std::size_t passed = 0;
    for (const VectorCheck& check : checks) {
        if (check.passed) {
            ++passed;
            out << "PASS  " << check.name << "\n";
        } else {
            out << "FAIL  " << check.name << ": " << check.detail << "\n";
        }
    }
    out << passed << "/" << checks.size() << " vectors passed\n";
    return passed == checks.size();
}

}  // namespace dnarabin
