#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dnarabin {

struct VectorCheck {
    std::string name;
    bool passed;
    std::string detail;  // empty when passed
};

/// Built-in self-test over the fixed demo vectors: the small-prime background
/// example (p=167, q=127) and the seven-character end-to-end example
/// (p=6911, q=6947, spy '*', message "Success").
std::vector<VectorCheck> run_builtin_vectors();

/// One PASS/FAIL line per vector plus a summary. True when all pass.
bool report_builtin_vectors(std::ostream& out);

}  // namespace dnarabin
