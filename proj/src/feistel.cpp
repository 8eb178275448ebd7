#include "dnarabin/feistel.hpp"

namespace dnarabin {

namespace {

void check_width(const BitString& block) {
    if (block.size() % 2 != 0)
        fail(Errc::odd_width, "block width " + std::to_string(block.size()) + " is odd");
    if (block.empty()) fail(Errc::invalid_argument, "block is empty");
}

}  // namespace

BitString f_round(const BitString& block) {
    check_width(block);
    const std::size_t half = block.size() / 2;
    const BitString left = block.slice(0, half);
    const BitString right = block.slice(half, half);
    BitString out = right;
    out.append(left ^ right);
    return out;
}

BitString f_inverse(const BitString& block) { return f_round(f_round(block)); }

}  // namespace dnarabin
