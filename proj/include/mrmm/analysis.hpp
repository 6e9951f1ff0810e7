#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mrmm/engine.hpp"
#include "mrmm/factor.hpp"
#include "mrmm/poly.hpp"
#include "mrmm/spec.hpp"

namespace mrmm {

/// Result of Berlekamp-Massey on a bit prefix. The connection polynomial is
/// reported in characteristic form X^L * C(1/X), so deg(connection) = lc.
struct LinearComplexityReport {
    std::uint64_t lc = 0;
    PolyF2 connection;
    std::uint64_t bits_consumed = 0;
};

LinearComplexityReport berlekamp_massey(std::span<const std::uint8_t> bits);

/// 2 * expected_lc + 64: enough bits for BM plus a misconfiguration margin.
std::uint64_t default_bm_sample(std::uint64_t expected_lc);

/// Bit (m - j) of each word: the j-th coordinate (1-based) under the fixed
/// packing.
std::vector<std::uint8_t> coordinate_stream(std::span<const std::uint64_t> words, unsigned m,
                                            unsigned j);

/// Smallest r >= 1 with state(t + r) = state(t); brute force, guarded at
/// mn <= 24.
std::uint64_t measure_period(const MrmmSpec& spec, const MrmmState& seed);

struct VerifyReport {
    bool char_poly_ok = false;      // f(T) = 0 on the assembled companion matrix
    bool primitive_ok = false;      // is_primitive(f, factors)
    bool c0_nonsingular_ok = false; // reconstructed C_0 invertible

    bool all() const { return char_poly_ok && primitive_ok && c0_nonsingular_ok; }
};

VerifyReport verify_spec(const MrmmSpec& spec, const FactorSet& factors);

}  // namespace mrmm
