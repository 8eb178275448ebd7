#pragma once

#include "dnarabin/bitstring.hpp"

namespace dnarabin {

// One unkeyed round on an even-width block: (l, r) -> (r, l ^ r). The round
// has order three, so applying it twice undoes a single application.

BitString f_round(const BitString& block);
BitString f_inverse(const BitString& block);

}  // namespace dnarabin
