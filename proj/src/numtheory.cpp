#include "dnarabin/numtheory.hpp"

#include <array>
#include <bit>
#include <initializer_list>

namespace dnarabin {

namespace mp = boost::multiprecision;

namespace {

// All primes below 256. Complete trial division for anything below 2^16.
constexpr std::array<unsigned, 54> kSmallPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
    191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251};

}  // namespace

std::size_t bit_length(const Bigint& v) {
    if (v == 0) return 0;
    return static_cast<std::size_t>(mp::msb(v)) + 1;
}

RandomSource::RandomSource() {
    std::random_device rd;
    gen_.seed((static_cast<std::uint64_t>(rd()) << 32) ^ rd());
}

RandomSource::RandomSource(std::uint64_t seed) : gen_(seed) {}

std::uint64_t RandomSource::next_u64() { return gen_(); }

std::uint64_t RandomSource::uniform_u64_below(std::uint64_t bound) {
    if (bound == 0) fail(Errc::invalid_argument, "uniform_u64_below: bound must be positive");
    if (bound == 1) return 0;
    const int bits = 64 - std::countl_zero(bound - 1);
    const std::uint64_t mask = bits == 64 ? ~0ULL : (1ULL << bits) - 1;
    for (;;) {
        const std::uint64_t v = gen_() & mask;
        if (v < bound) return v;
    }
}

Bigint RandomSource::random_bits(std::size_t bit_count) {
    Bigint acc = 0;
    for (std::size_t got = 0; got < bit_count; got += 64) {
        acc <<= 64;
        acc |= Bigint(gen_());
    }
    acc &= (Bigint(1) << bit_count) - 1;
    return acc;
}

Bigint RandomSource::uniform_below(const Bigint& bound) {
    if (bound <= 0) fail(Errc::invalid_argument, "uniform_below: bound must be positive");
    const std::size_t bits = bit_length(bound - 1);
    for (;;) {
        Bigint v = random_bits(bits);
        if (v < bound) return v;
    }
}

Bigint RandomSource::uniform_range(const Bigint& lo, const Bigint& hi) {
    if (lo > hi) fail(Errc::invalid_argument, "uniform_range: empty range");
    return lo + uniform_below(hi - lo + 1);
}

Bigint mod_pow(Bigint base, Bigint exp, const Bigint& modulus) {
    if (modulus == 0) fail(Errc::zero_modulus, "mod_pow: modulus is zero");
    if (modulus < 0 || exp < 0)
        fail(Errc::invalid_argument, "mod_pow: modulus and exponent must be nonnegative");
    if (modulus == 1) return 0;
    base %= modulus;
    if (base < 0) base += modulus;
    Bigint result = 1;
    while (exp > 0) {
        if (mp::bit_test(exp, 0)) result = result * base % modulus;
        base = base * base % modulus;
        exp >>= 1;
    }
    return result;
}

EgcdResult extended_gcd(const Bigint& a, const Bigint& b) {
    if (a < 0 || b < 0) fail(Errc::invalid_argument, "extended_gcd: inputs must be nonnegative");
    if (a == 0 && b == 0) fail(Errc::both_zero, "extended_gcd: gcd(0, 0) is undefined");
    Bigint prev_r = a, r = b;
    Bigint prev_x = 1, x = 0;
    Bigint prev_y = 0, y = 1;
    while (r != 0) {
        const Bigint quotient = prev_r / r;
        prev_r -= quotient * r;
        std::swap(prev_r, r);
        prev_x -= quotient * x;
        std::swap(prev_x, x);
        prev_y -= quotient * y;
        std::swap(prev_y, y);
    }
    return {prev_r, prev_x, prev_y};
}

bool is_probable_prime(const Bigint& n, int rounds, RandomSource& rng) {
    if (rounds < 1) fail(Errc::invalid_argument, "is_probable_prime: rounds must be >= 1");
    if (n < 2) return false;
    for (unsigned p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 65536) return true;  // composites below 2^16 have a factor below 256

    const Bigint n_minus_1 = n - 1;
    const std::size_t s = mp::lsb(n_minus_1);
    const Bigint d = n_minus_1 >> s;

    const auto witnesses_composite = [&](const Bigint& a) {
        Bigint v = mod_pow(a, d, n);
        if (v == 1 || v == n_minus_1) return false;
        for (std::size_t i = 1; i < s; ++i) {
            v = v * v % n;
            if (v == n_minus_1) return false;
        }
        return true;
    };

    // The first seven primes decide primality exactly below this bound.
    static const Bigint kDeterministicBound("341550071728321");
    if (n < kDeterministicBound) {
        for (unsigned a : {2U, 3U, 5U, 7U, 11U, 13U, 17U}) {
            if (witnesses_composite(a)) return false;
        }
        return true;
    }

    for (int i = 0; i < rounds; ++i) {
        if (witnesses_composite(rng.uniform_range(2, n - 2))) return false;
    }
    return true;
}

Bigint gen_blum_prime(std::size_t bit_count, RandomSource& rng) {
    if (bit_count < 3) fail(Errc::invalid_argument, "gen_blum_prime: bit count must be >= 3");
    const std::size_t max_attempts = 64 * bit_count;
    for (std::size_t i = 0; i < max_attempts; ++i) {
        Bigint candidate = rng.random_bits(bit_count);
        mp::bit_set(candidate, static_cast<unsigned>(bit_count - 1));
        candidate |= 3;  // forces candidate = 3 (mod 4)
        if (is_probable_prime(candidate, 40, rng)) return candidate;
    }
    fail(Errc::exhausted_attempts, "gen_blum_prime: no prime among " +
                                       std::to_string(max_attempts) + " candidates of " +
                                       std::to_string(bit_count) + " bits");
}

}  // namespace dnarabin
