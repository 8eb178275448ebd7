#include "dnarabin/bitstring.hpp"

namespace dnarabin {

namespace mp = boost::multiprecision;

BitString BitString::zeros(std::size_t count) {
    BitString b;
    b.bits_.assign(count, 0);
    return b;
}

BitString BitString::from_string(std::string_view text) {
    BitString b;
    b.bits_.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1')
            fail(Errc::parse_error, std::string("bit string: unexpected character '") + text[i] +
                                        "' at position " + std::to_string(i + 1));
        b.bits_.push_back(text[i] == '1');
    }
    return b;
}

BitString BitString::from_integer(const Bigint& value, std::size_t width) {
    if (value < 0) fail(Errc::invalid_argument, "bit string: value must be nonnegative");
    if (bit_length(value) > width)
        fail(Errc::invalid_argument, "bit string: " + value.str() + " does not fit in " +
                                         std::to_string(width) + " bits");
    BitString b = zeros(width);
    for (std::size_t i = 0; i < width; ++i) {
        if (mp::bit_test(value, static_cast<unsigned>(i))) b.bits_[width - 1 - i] = 1;
    }
    return b;
}

Bigint BitString::to_integer() const {
    Bigint v = 0;
    for (const std::uint8_t b : bits_) {
        v <<= 1;
        v |= b;
    }
    return v;
}

std::string BitString::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) s[i] = '1';
    }
    return s;
}

void BitString::push_back(int b) {
    if (b != 0 && b != 1) fail(Errc::invalid_argument, "bit string: bit must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
}

void BitString::append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::slice(std::size_t pos, std::size_t count) const {
    if (pos + count > bits_.size()) fail(Errc::invalid_argument, "bit string: slice out of range");
    BitString b;
    b.bits_.assign(bits_.begin() + pos, bits_.begin() + pos + count);
    return b;
}

BitString operator^(const BitString& a, const BitString& b) {
    if (a.size() != b.size())
        fail(Errc::invalid_argument, "bit string: xor of lengths " + std::to_string(a.size()) +
                                         " and " + std::to_string(b.size()));
    BitString r = a;
    for (std::size_t i = 0; i < r.bits_.size(); ++i) r.bits_[i] ^= b.bits_[i];
    return r;
}

}  // namespace dnarabin
