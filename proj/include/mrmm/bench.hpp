#pragma once

#include <cstdint>
#include <string>

#include "mrmm/spec.hpp"

namespace mrmm {

struct BenchReport {
    std::string spec_id;
    std::uint64_t words_generated = 0;
    double fast_rate = 0;   // words per second
    double naive_rate = 0;  // words per second
    double ratio = 0;       // fast / naive
    std::uint64_t shifts_per_step = 0;
    std::uint64_t max_xors_per_step = 0;
};

/// Times the fast and naive steppers over `count` words from the same seed,
/// cross-checks their output checksums, and records the structural operation
/// counts of the fast path. count must be at least 10^6 for a stable rate.
BenchReport bench(const MrmmSpec& spec, std::uint64_t count);

}  // namespace mrmm
