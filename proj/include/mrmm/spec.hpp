#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mrmm/poly.hpp"

namespace mrmm {

/// A fully determined generator: word width m, order n, characteristic
/// polynomial f of degree mn, and the packed last columns V^0..V^{n-1} of the
/// coefficient matrices. Packing convention throughout: coordinate i (1-based)
/// of an m-vector lives at bit (m - i), so coordinate m is the LSB.
struct MrmmSpec {
    unsigned m = 0;
    unsigned n = 0;
    PolyF2 f;
    std::vector<std::uint64_t> v_cols;

    /// Validates shape: 1 <= m <= 64, n >= 1, f monic of degree exactly m*n
    /// with constant term 1, n packed columns each fitting m bits, and V^0's
    /// coordinate-1 bit set (a_0 = 1, which keeps C_0 nonsingular). Coherence
    /// of V against f is *not* checked here; that is verify_spec's job.
    static MrmmSpec create(unsigned m, unsigned n, PolyF2 f, std::vector<std::uint64_t> v_cols);

    friend bool operator==(const MrmmSpec&, const MrmmSpec&) = default;
};

/// Spec file: `format=1`, `m=`, `n=`, `q=2`, `f=0x...`, `V=0x...,0x...`.
/// Emission is canonical (that order, uppercase minimal hex); parse ∘ emit
/// is byte-identical.
MrmmSpec load_spec(std::istream& in);
void save_spec(const MrmmSpec& spec, std::ostream& out);

}  // namespace mrmm
