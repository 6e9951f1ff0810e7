#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mrmm/bitmatrix.hpp"
#include "mrmm/spec.hpp"

namespace mrmm {

/// Snapshot of a generator: words[j] holds s_{time+j}, each fitting m bits.
struct MrmmState {
    std::vector<std::uint64_t> words;
    std::uint64_t time = 0;

    friend bool operator==(const MrmmState&, const MrmmState&) = default;
};

/// Throws unless the state shape matches the spec (n words, m bits each).
void validate_state(const MrmmState& state, const MrmmSpec& spec);

/// Structural operation counters for the fast step.
struct StepOps {
    std::uint64_t shifts = 0;
    std::uint64_t xors = 0;
};

/// Owns a spec plus a ring-buffered state; stepping is O(1) in n.
class Generator {
public:
    Generator(MrmmSpec spec, MrmmState seed);

    const MrmmSpec& spec() const noexcept { return spec_; }
    MrmmState state() const;

    /// One fast step: new word = (w_0 >> 1) xor the V^j selected by LSBs.
    std::uint64_t step_fast();
    std::uint64_t step_fast_counted(StepOps& ops);
    /// One reference step: explicit C_j matrix-vector products.
    std::uint64_t step_naive();

    /// Bulk fast generation; words are s_n, s_{n+1}, ... (seed not emitted).
    void generate_into(std::uint64_t* out, std::size_t count);

private:
    MrmmSpec spec_;
    std::vector<std::uint64_t> ring_;
    std::size_t head_ = 0;
    std::uint64_t time_ = 0;
    std::optional<std::vector<BitMatrix>> cs_;  // reconstructed C_j, for the naive path

    void push(std::uint64_t w);
    const std::vector<BitMatrix>& coefficient_matrices();
};

/// Functional variants (spec op signatures): advance one step, returning the
/// successor state.
MrmmState step_fast(const MrmmState& state, const MrmmSpec& spec);
MrmmState step_naive(const MrmmState& state, const MrmmSpec& spec);

std::vector<std::uint64_t> generate(const MrmmSpec& spec, const MrmmState& seed,
                                    std::uint64_t count);

/// The mn x mn block companion matrix T: subdiagonal identity blocks, last
/// block-column C_0..C_{n-1}.
BitMatrix companion_matrix(const MrmmSpec& spec);

/// The C_j matrices implied by the packed columns (C_0 includes the shift R).
std::vector<BitMatrix> reconstruct_coefficient_matrices(const MrmmSpec& spec);

/// C(r,.) dotted against a coordinate-packed word; result coordinate-packed.
std::uint64_t matvec_packed(const BitMatrix& c, std::uint64_t word, unsigned m);

}  // namespace mrmm
