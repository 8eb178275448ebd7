#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dnarabin/numtheory.hpp"

namespace dnarabin {

/// Fixed-length bit sequence, most significant bit first. The length is part
/// of the value: a 26-bit block keeps its leading zeros.
class BitString {
public:
    BitString() = default;

    static BitString zeros(std::size_t count);
    static BitString from_string(std::string_view text);  // '0' / '1' characters
    static BitString from_integer(const Bigint& value, std::size_t width);

    Bigint to_integer() const;
    std::string to_string() const;

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int bit(std::size_t i) const { return bits_[i]; }

    void push_back(int b);
    void append(const BitString& other);
    BitString slice(std::size_t pos, std::size_t count) const;

    friend BitString operator^(const BitString& a, const BitString& b);
    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace dnarabin
