#include "mrmm/search.hpp"

#include <limits>
#include <string>

#include "mrmm/error.hpp"
#include "mrmm/horner.hpp"

namespace mrmm {

std::uint64_t default_max_iters(unsigned m, unsigned n, const FactorSet& factors) {
    BigUint d = BigUint(m) * n;
    BigUint expected_num = d << factors.d;  // mn * 2^mn
    BigUint phi = totient(factors);
    BigUint ceil_inv_alpha = (expected_num + phi - 1) / phi;
    BigUint bound = 64 * d * ceil_inv_alpha;
    if (bound > std::numeric_limits<std::uint64_t>::max())
        return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(bound);
}

SearchResult find_primitive_mrmm(unsigned m, unsigned n, const FactorSet& factors, Rng& rng,
                                 std::optional<std::uint64_t> max_iters, std::stop_token cancel) {
    if (m < 1 || n < 1) throw InvalidInput("m and n must be >= 1");
    unsigned d = m * n;
    if (d < 2) throw InvalidInput("search needs mn >= 2");
    if (factors.d != d)
        throw InvalidInput("factor set is for degree " + std::to_string(factors.d) +
                           ", search needs " + std::to_string(d));
    std::uint64_t bound = max_iters ? *max_iters : default_max_iters(m, n, factors);
    if (bound < 1) throw InvalidInput("max_iters must be >= 1");

    std::uint64_t iters = 0;
    while (iters < bound) {
        if (cancel.stop_requested()) throw Cancelled("search cancelled");
        ++iters;
        PolyF2 f = random_monic_poly(d, rng);
        if (!is_irreducible(f)) continue;
        if (!is_primitive(f, factors)) continue;
        return {extract_spec(f, m, n), iters};
    }
    throw SearchExhausted("no primitive polynomial found in " + std::to_string(bound) +
                              " candidates",
                          iters);
}

}  // namespace mrmm
