#include "dnarabin/errors.hpp"

namespace dnarabin {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::zero_modulus: return "ZeroModulus";
        case Errc::both_zero: return "BothZero";
        case Errc::exhausted_attempts: return "ExhaustedAttempts";
        case Errc::message_too_large: return "MessageTooLarge";
        case Errc::not_a_residue: return "NotAResidue";
        case Errc::zero_byte: return "ZeroByte";
        case Errc::invalid_nucleotide: return "InvalidNucleotide";
        case Errc::odd_length: return "OddLength";
        case Errc::odd_width: return "OddWidth";
        case Errc::odd_block_width: return "OddBlockWidth";
        case Errc::unit_overflow: return "UnitOverflow";
        case Errc::no_spy_match: return "NoSpyMatch";
        case Errc::ambiguous_roots: return "AmbiguousRoots";
        case Errc::key_length_mismatch: return "KeyLengthMismatch";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::parse_error: return "ParseError";
        case Errc::io_error: return "IoError";
    }
    return "UnknownError";
}

}  // namespace dnarabin
