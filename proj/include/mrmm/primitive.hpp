#pragma once

#include <random>

#include "mrmm/factor.hpp"
#include "mrmm/poly.hpp"

namespace mrmm {

/// The seeded deterministic random source used across the library.
using Rng = std::mt19937_64;

/// Uniform monic degree-d polynomial with constant term forced to 1.
PolyF2 random_monic_poly(unsigned d, Rng& rng);

/// Ben-Or irreducibility test: X^{2^i} computed by incremental squaring,
/// gcd(f, X^{2^i} - X) must stay trivial for i = 1..⌊d/2⌋.
bool is_irreducible(const PolyF2& f);

/// Primitivity via the factored group order: X^{(2^d - 1)/p_i} mod f != 1
/// for every prime p_i. Caller guarantees f irreducible (the search filters
/// by irreducibility first); on reducible input the test is not conclusive.
bool is_primitive(const PolyF2& f, const FactorSet& factors);

}  // namespace mrmm
