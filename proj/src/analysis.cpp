#include "mrmm/analysis.hpp"

#include "mrmm/error.hpp"
#include "mrmm/primitive.hpp"

namespace mrmm {

LinearComplexityReport berlekamp_massey(std::span<const std::uint8_t> bits) {
    if (bits.empty()) throw InvalidInput("berlekamp_massey needs a nonempty sequence");
    // Iterative BM over GF(2). c is the feedback polynomial (c_0 = 1,
    // s_t = sum c_i s_{t-i}); b is the copy from the last length change.
    PolyF2 c = PolyF2::one();
    PolyF2 b = PolyF2::one();
    std::size_t l = 0, m = 1;
    for (std::size_t t = 0; t < bits.size(); ++t) {
        unsigned d = bits[t] & 1;
        for (std::size_t i = 1; i <= l; ++i)
            d ^= static_cast<unsigned>(c.coeff(i)) & (bits[t - i] & 1);
        if (d == 0) {
            ++m;
        } else if (2 * l <= t) {
            PolyF2 keep = c;
            c.xor_shifted(b, m);
            l = t + 1 - l;
            b = keep;
            m = 1;
        } else {
            c.xor_shifted(b, m);
            ++m;
        }
    }
    LinearComplexityReport report;
    report.lc = l;
    report.bits_consumed = bits.size();
    // Characteristic form: coefficient c_i lands on X^{L-i}.
    for (std::size_t i = 0; i <= l; ++i)
        if (c.coeff(i)) report.connection.set_coeff(l - i, true);
    return report;
}

std::uint64_t default_bm_sample(std::uint64_t expected_lc) { return 2 * expected_lc + 64; }

std::vector<std::uint8_t> coordinate_stream(std::span<const std::uint64_t> words, unsigned m,
                                            unsigned j) {
    if (j < 1 || j > m) throw InvalidInput("coordinate index must be in 1..m");
    std::vector<std::uint8_t> out;
    out.reserve(words.size());
    for (std::uint64_t w : words) out.push_back(static_cast<std::uint8_t>((w >> (m - j)) & 1));
    return out;
}

std::uint64_t measure_period(const MrmmSpec& spec, const MrmmState& seed) {
    unsigned d = spec.m * spec.n;
    if (d > 24) throw ResourceGuard("period measurement guarded at mn <= 24, got mn = " +
                                    std::to_string(d));
    validate_state(seed, spec);
    Generator g(spec, seed);
    const std::vector<std::uint64_t> start = seed.words;
    std::uint64_t limit = (std::uint64_t{1} << d) + 1;
    for (std::uint64_t r = 1; r <= limit; ++r) {
        g.step_fast();
        if (g.state().words == start) return r;
    }
    throw Error("no return to the seed state; the step map is not a permutation");
}

namespace {

// f(T) = 0, evaluated column by column: walk v, T v, T^2 v, ... as row
// vectors against T^t and accumulate the coefficients of f.
bool annihilates(const PolyF2& f, const BitMatrix& t) {
    BitMatrix tt = t.transposed();
    std::size_t d = t.rows();
    for (std::size_t j = 0; j < d; ++j) {
        BitMatrix v(1, d);
        v.set(0, j, true);
        BitMatrix acc(1, d);
        if (f.coeff(0)) acc = acc + v;
        auto deg = f.degree();
        for (std::size_t i = 1; i <= *deg; ++i) {
            v = v * tt;
            if (f.coeff(i)) acc = acc + v;
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

}  // namespace

VerifyReport verify_spec(const MrmmSpec& spec, const FactorSet& factors) {
    if (factors.d != spec.m * spec.n)
        throw InvalidInput("factor set degree does not match mn");
    VerifyReport report;
    BitMatrix t = companion_matrix(spec);
    report.char_poly_ok = annihilates(spec.f, t);
    report.primitive_ok = is_primitive(spec.f, factors);
    report.c0_nonsingular_ok = reconstruct_coefficient_matrices(spec)[0].nonsingular();
    return report;
}

}  // namespace mrmm
