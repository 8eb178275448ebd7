#pragma once

#include <cstdint>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "dnarabin/errors.hpp"

namespace dnarabin {

// Arbitrary-precision integer. Nonnegative unless a contract says otherwise
// (Bezout coefficients and CRT intermediates are signed).
using Bigint = boost::multiprecision::cpp_int;

/// Digits in the minimal binary form of v, 0 for v = 0.
std::size_t bit_length(const Bigint& v);

/// Deterministic pseudo-random stream. Equal seeds give identical streams on
/// every platform; the no-argument constructor seeds from the OS.
///
/// Not a CSPRNG. Fine for tests and demo keys, which is all this project
/// generates.
class RandomSource {
public:
    RandomSource();
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t next_u64();
    std::uint64_t uniform_u64_below(std::uint64_t bound);        // [0, bound)
    Bigint random_bits(std::size_t bit_count);                   // [0, 2^bit_count)
    Bigint uniform_below(const Bigint& bound);                   // [0, bound)
    Bigint uniform_range(const Bigint& lo, const Bigint& hi);    // [lo, hi]

private:
    std::mt19937_64 gen_;
};

struct EgcdResult {
    Bigint g;  // gcd(a, b)
    Bigint x;  // a*x + b*y == g
    Bigint y;
};

/// base^exp mod modulus by square-and-multiply; base^exp is never formed.
Bigint mod_pow(Bigint base, Bigint exp, const Bigint& modulus);

/// Iterative extended Euclid over nonnegative inputs, returning the canonical
/// reduced Bezout pair.
EgcdResult extended_gcd(const Bigint& a, const Bigint& b);

/// Miller-Rabin primality test. Exact below 2^16 (trial division) and below
/// 341550071728321 (fixed witness set); above that, `rounds` random bases
/// bound the false-positive probability by 4^-rounds.
bool is_probable_prime(const Bigint& n, int rounds, RandomSource& rng);

/// Random prime with exactly bit_count bits and p = 3 (mod 4). Gives up with
/// ExhaustedAttempts after 64 * bit_count candidates.
Bigint gen_blum_prime(std::size_t bit_count, RandomSource& rng);

}  // namespace dnarabin
