#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "dnarabin/numtheory.hpp"

namespace dnarabin {

struct RabinPublicKey {
    Bigint n;  // product of two distinct Blum primes
};

struct RabinPrivateKey {
    Bigint p;
    Bigint q;

    RabinPublicKey public_key() const { return RabinPublicKey{p * q}; }
};

struct RabinKeyPair {
    RabinPublicKey pub;
    RabinPrivateKey priv;
};

/// The four CRT square roots of a ciphertext. A multiset closed under
/// negation mod n; entries repeat when gcd(c, n) > 1.
struct RootSet {
    std::array<Bigint, 4> roots;

    bool contains(const Bigint& x) const;
    std::vector<Bigint> distinct() const;  // sorted, duplicates removed
};

RabinKeyPair keygen(std::size_t bits_per_prime, RandomSource& rng);

/// Key pair from fixed primes; rejects anything that is not a pair of
/// distinct Blum primes.
RabinKeyPair keypair_from_primes(const Bigint& p, const Bigint& q);

/// C = m^2 mod n. Requires 0 <= m < n.
Bigint encrypt(const Bigint& m, const RabinPublicKey& pk);

/// All four square roots of c: one exponentiation mod each prime, combined
/// with the Bezout pair of (p, q). NotAResidue means c has no square root
/// mod n, which signals a corrupted ciphertext.
RootSet decrypt_roots(const Bigint& c, const RabinPrivateKey& sk);

/// Redundancy for single bytes: the byte's minimal binary form written twice
/// in a row, so 72 = 1001000 becomes 10010001001000 = 9288.
Bigint duplication_encode(unsigned byte_value);

/// Inverse filter for duplication_encode: the half value when the minimal
/// binary form of x splits into two equal byte-sized halves, absent otherwise.
std::optional<unsigned> duplication_check(const Bigint& x);

/// A decryption oracle answers a ciphertext with one square root of it and
/// applies no redundancy filtering.
using DecryptionOracle = std::function<Bigint(const Bigint&)>;

/// Oracle backed by a private key; always answers with the smallest root.
DecryptionOracle honest_oracle(RabinPrivateKey sk);

struct CcaResult {
    Bigint p;
    Bigint q;
    int attempts;  // oracle queries spent, including the successful one
};

/// Chosen-ciphertext factorization: submit r^2 mod n for random r and derive
/// a factor from any answer not congruent to +-r. Each attempt succeeds with
/// probability about 1/2, so the failure chance after k attempts is 2^-k.
CcaResult cca_factor(const DecryptionOracle& oracle, const RabinPublicKey& pk, RandomSource& rng,
                     int max_attempts);

}  // namespace dnarabin
