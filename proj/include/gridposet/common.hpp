#pragma once

#include <stdexcept>
#include <string>

namespace gridposet {

// A parameter exceeds the range the exact engine supports. Exceeding a limit
// is always an error, never a silent truncation.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad spec string, unreadable file, invalid relation.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode { Weak, Strong };

const char* modeName(Mode m);
Mode parseMode(const std::string& s);

struct SearchStats {
    long long nodes = 0;
    long long prunedBound = 0;
    long long prunedInfeasible = 0;
    double wallMs = 0.0;
};

}  // namespace gridposet
