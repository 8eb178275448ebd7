#include "dnarabin/rabin.hpp"

#include <algorithm>
#include <utility>

namespace dnarabin {

namespace mp = boost::multiprecision;

namespace {

Bigint mod_n(Bigint v, const Bigint& n) {
    v %= n;
    if (v < 0) v += n;
    return v;
}

void check_blum_prime(const Bigint& v, const char* name, RandomSource& rng) {
    if (v % 4 != 3)
        fail(Errc::invalid_argument, std::string(name) + " = " + v.str() + " is not 3 mod 4");
    if (!is_probable_prime(v, 40, rng))
        fail(Errc::invalid_argument, std::string(name) + " = " + v.str() + " is not prime");
}

}  // namespace

bool RootSet::contains(const Bigint& x) const {
    return std::find(roots.begin(), roots.end(), x) != roots.end();
}

std::vector<Bigint> RootSet::distinct() const {
    std::vector<Bigint> v(roots.begin(), roots.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

RabinKeyPair keygen(std::size_t bits_per_prime, RandomSource& rng) {
    if (bits_per_prime < 4)
        fail(Errc::invalid_argument, "keygen: need at least 4 bits per prime");
    const Bigint p = gen_blum_prime(bits_per_prime, rng);
    Bigint q = gen_blum_prime(bits_per_prime, rng);
    for (int i = 0; q == p && i < 64; ++i) q = gen_blum_prime(bits_per_prime, rng);
    if (q == p)
        fail(Errc::exhausted_attempts, "keygen: could not find a second distinct prime of " +
                                           std::to_string(bits_per_prime) + " bits");
    return {RabinPublicKey{p * q}, RabinPrivateKey{p, q}};
}

RabinKeyPair keypair_from_primes(const Bigint& p, const Bigint& q) {
    RandomSource rng(0);  // witness source for the primality checks
    check_blum_prime(p, "p", rng);
    check_blum_prime(q, "q", rng);
    if (p == q) fail(Errc::invalid_argument, "p and q must be distinct");
    return {RabinPublicKey{p * q}, RabinPrivateKey{p, q}};
}

Bigint encrypt(const Bigint& m, const RabinPublicKey& pk) {
    if (m < 0) fail(Errc::invalid_argument, "message is negative");
    if (m >= pk.n)
        fail(Errc::message_too_large, "message " + m.str() + " >= modulus " + pk.n.str());
    return m * m % pk.n;
}

RootSet decrypt_roots(const Bigint& c, const RabinPrivateKey& sk) {
    const Bigint n = sk.p * sk.q;
    if (c < 0 || c >= n)
        fail(Errc::message_too_large,
             "ciphertext " + c.str() + " out of range for modulus " + n.str());

    // Square roots mod each Blum prime via one exponentiation.
    const Bigint root_p = mod_pow(c, (sk.p + 1) / 4, sk.p);
    const Bigint root_q = mod_pow(c, (sk.q + 1) / 4, sk.q);
    if (root_p * root_p % sk.p != c % sk.p || root_q * root_q % sk.q != c % sk.q)
        fail(Errc::not_a_residue, "ciphertext " + c.str() + " is not a quadratic residue mod n");

    const EgcdResult bezout = extended_gcd(sk.p, sk.q);  // bezout.x*p + bezout.y*q == 1
    const Bigint term_p = bezout.x * sk.p * root_q;
    const Bigint term_q = bezout.y * sk.q * root_p;
    return RootSet{{mod_n(term_p + term_q, n), mod_n(term_p - term_q, n),
                    mod_n(-term_p + term_q, n), mod_n(-term_p - term_q, n)}};
}

Bigint duplication_encode(unsigned byte_value) {
    if (byte_value == 0) fail(Errc::zero_byte, "byte 0 has no leading-zero-free binary form");
    if (byte_value > 255)
        fail(Errc::invalid_argument, "value " + std::to_string(byte_value) + " is not a byte");
    const std::size_t width = bit_length(byte_value);
    return (Bigint(byte_value) << width) | byte_value;
}

std::optional<unsigned> duplication_check(const Bigint& x) {
    const std::size_t digits = bit_length(x);
    if (digits == 0 || digits % 2 != 0) return std::nullopt;
    const std::size_t half = digits / 2;
    const Bigint low = x & ((Bigint(1) << half) - 1);
    const Bigint high = x >> half;
    if (high != low) return std::nullopt;
    if (low > 255) return std::nullopt;  // equal halves wider than a byte
    return low.convert_to<unsigned>();
}

DecryptionOracle honest_oracle(RabinPrivateKey sk) {
    return [sk = std::move(sk)](const Bigint& c) {
        const RootSet roots = decrypt_roots(c, sk);
        return *std::min_element(roots.roots.begin(), roots.roots.end());
    };
}

CcaResult cca_factor(const DecryptionOracle& oracle, const RabinPublicKey& pk, RandomSource& rng,
                     int max_attempts) {
    if (max_attempts < 1) fail(Errc::invalid_argument, "cca_factor: max_attempts must be >= 1");
    const Bigint& n = pk.n;
    if (n < 15) fail(Errc::invalid_argument, "cca_factor: modulus too small");

    const auto normalized = [&n](Bigint d, int attempts) {
        Bigint other = n / d;
        if (d > other) std::swap(d, other);
        return CcaResult{d, other, attempts};
    };

    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        const Bigint r = rng.uniform_range(2, n - 1);
        const Bigint shared = mp::gcd(r, n);
        if (shared > 1) return normalized(shared, attempt);  // lucky draw, r itself reveals a factor

        const Bigint root = oracle(r * r % n);
        const Bigint d = mp::gcd(mod_n(root - r, n), n);
        if (d > 1 && d < n) return normalized(d, attempt);
        // root was +-r: gcd is trivial, try a fresh r
    }
    fail(Errc::exhausted_attempts,
         "cca_factor: no factor after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace dnarabin
