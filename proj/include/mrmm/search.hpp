#pragma once

#include <cstdint>
#include <optional>
#include <stop_token>

#include "mrmm/factor.hpp"
#include "mrmm/primitive.hpp"
#include "mrmm/spec.hpp"

namespace mrmm {

struct SearchResult {
    MrmmSpec spec;
    std::uint64_t iterations = 0;  // candidate polynomials drawn
};

/// 64 * mn * ceil(1/alpha), alpha = phi(2^mn - 1) / (mn * 2^mn).
std::uint64_t default_max_iters(unsigned m, unsigned n, const FactorSet& factors);

/// Randomized search: draw random monic candidates (a_0 = 1), filter by
/// irreducibility then primitivity, and extract the coefficient structure of
/// the first winner. Deterministic given the rng seed. Throws SearchExhausted
/// after max_iters candidates, Cancelled if the stop token fires.
SearchResult find_primitive_mrmm(unsigned m, unsigned n, const FactorSet& factors, Rng& rng,
                                 std::optional<std::uint64_t> max_iters = std::nullopt,
                                 std::stop_token cancel = {});

}  // namespace mrmm
