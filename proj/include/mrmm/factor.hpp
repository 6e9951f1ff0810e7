#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mrmm/bigint.hpp"

namespace mrmm {

/// Distinct prime factors of 2^d - 1, sorted ascending. Construction verifies
/// that every entry is prime, divides 2^d - 1, and that the maximal prime
/// powers jointly reconstruct 2^d - 1 (so the list is complete).
struct FactorSet {
    unsigned d = 0;
    std::vector<BigUint> primes;

    static FactorSet create(unsigned d, std::vector<BigUint> primes);
    BigUint modulus() const { return pow2_minus_one(d); }
};

/// Built-in factorizer: trial division to 10^6, then Pollard rho with Brent
/// cycle detection. Covers 1 <= d <= 64; beyond that a factor file is required.
FactorSet factor_2d_minus_1(unsigned d);

/// Factor file: `format=1`, `d=<int>`, `primes=<comma-separated decimals>`.
FactorSet load_factor_set(std::istream& in);
void save_factor_set(const FactorSet& fs, std::ostream& out);

/// Deterministic Miller-Rabin for 64-bit n.
bool is_prime_u64(std::uint64_t n);

/// Euler phi of 2^d - 1, from the factor set's maximal prime powers.
BigUint totient(const FactorSet& fs);

}  // namespace mrmm
