#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mrmm/engine.hpp"
#include "mrmm/spec.hpp"

namespace mrmm {

/// A Langford arrangement of order g: each k in 1..g appears twice with
/// exactly k entries between its occurrences (so r_k = l_k + k + 1).
struct LangfordArrangement {
    unsigned g = 0;
    std::vector<unsigned> seq;

    /// Validating loader for an explicit arrangement.
    static LangfordArrangement from_sequence(std::vector<unsigned> seq);

    friend bool operator==(const LangfordArrangement&, const LangfordArrangement&) = default;
};

/// First arrangement found by deterministic backtracking (largest k placed
/// first, leftmost feasible slot); nullopt when none exists.
std::optional<LangfordArrangement> find_langford(unsigned g);

/// 1-based (l_k, r_k) for k = 1..g.
std::vector<std::pair<unsigned, unsigned>> positions(const LangfordArrangement& arr);

/// The product stream u_j = sum over k of s_{2g+j-l_k} AND s_{2g+j-r_k}
/// (sum = XOR), over the MRMM sequence seeded by `seed`. Requires n = 2g.
std::vector<std::uint64_t> u_stream(const MrmmSpec& spec, const LangfordArrangement& arr,
                                    const MrmmState& seed, std::uint64_t count);

/// The tweaked stream t_i = u_0 xor ... xor u_i.
std::vector<std::uint64_t> tweaked_stream(const MrmmSpec& spec, const LangfordArrangement& arr,
                                          const MrmmState& seed, std::uint64_t count);

}  // namespace mrmm
