#pragma once

#include <stdexcept>
#include <string>

namespace dnarabin {

// Every failure the library reports, named so the CLI can print a stable,
// machine-parseable code in front of the human-readable message.
enum class Errc {
    zero_modulus,
    both_zero,
    exhausted_attempts,
    message_too_large,
    not_a_residue,
    zero_byte,
    invalid_nucleotide,
    odd_length,
    odd_width,
    odd_block_width,
    unit_overflow,
    no_spy_match,
    ambiguous_roots,
    key_length_mismatch,
    invalid_argument,
    parse_error,
    io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace dnarabin
