#include "mrmm/engine.hpp"

#include <algorithm>
#include <bit>

#include "mrmm/error.hpp"

namespace mrmm {

namespace {

std::uint64_t reverse_low_bits(std::uint64_t w, unsigned m) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < m; ++i)
        if ((w >> i) & 1) r |= std::uint64_t{1} << (m - 1 - i);
    return r;
}

// The bulk kernel, instantiated at each power-of-two word width.
template <typename W>
void bulk_generate(const MrmmSpec& spec, std::vector<std::uint64_t>& ring, std::size_t& head,
                   std::uint64_t* out, std::size_t count) {
    const unsigned n = spec.n;
    std::vector<W> buf(n), v(n);
    for (unsigned j = 0; j < n; ++j) {
        buf[j] = static_cast<W>(ring[(head + j) % n]);
        v[j] = static_cast<W>(spec.v_cols[j]);
    }
    std::size_t h = 0;
    for (std::size_t i = 0; i < count; ++i) {
        W next = static_cast<W>(buf[h] >> 1);
        std::size_t idx = h;
        for (unsigned j = 0; j < n; ++j) {
            if (buf[idx] & 1) next ^= v[j];
            if (++idx == n) idx = 0;
        }
        buf[h] = next;
        if (++h == n) h = 0;
        out[i] = next;
    }
    for (unsigned j = 0; j < n; ++j) ring[j] = buf[(h + j) % n];
    head = 0;
}

}  // namespace

void validate_state(const MrmmState& state, const MrmmSpec& spec) {
    if (state.words.size() != spec.n)
        throw InvalidInput("state must hold exactly n words");
    for (std::uint64_t w : state.words)
        if (spec.m < 64 && (w >> spec.m) != 0)
            throw InvalidInput("state word exceeds m bits");
}

Generator::Generator(MrmmSpec spec, MrmmState seed) : spec_(std::move(spec)) {
    validate_state(seed, spec_);
    ring_ = std::move(seed.words);
    time_ = seed.time;
}

MrmmState Generator::state() const {
    MrmmState s;
    s.words.resize(spec_.n);
    for (unsigned j = 0; j < spec_.n; ++j) s.words[j] = ring_[(head_ + j) % spec_.n];
    s.time = time_;
    return s;
}

void Generator::push(std::uint64_t w) {
    ring_[head_] = w;
    head_ = (head_ + 1) % spec_.n;
    ++time_;
}

std::uint64_t Generator::step_fast() {
    std::uint64_t next = ring_[head_] >> 1;
    for (unsigned j = 0; j < spec_.n; ++j)
        if (ring_[(head_ + j) % spec_.n] & 1) next ^= spec_.v_cols[j];
    push(next);
    return next;
}

std::uint64_t Generator::step_fast_counted(StepOps& ops) {
    std::uint64_t next = ring_[head_] >> 1;
    ops.shifts += 1;
    for (unsigned j = 0; j < spec_.n; ++j) {
        if (ring_[(head_ + j) % spec_.n] & 1) {
            next ^= spec_.v_cols[j];
            ops.xors += 1;
        }
    }
    push(next);
    return next;
}

const std::vector<BitMatrix>& Generator::coefficient_matrices() {
    if (!cs_) cs_ = reconstruct_coefficient_matrices(spec_);
    return *cs_;
}

std::uint64_t Generator::step_naive() {
    const auto& cs = coefficient_matrices();
    std::uint64_t next = 0;
    for (unsigned j = 0; j < spec_.n; ++j)
        next ^= matvec_packed(cs[j], ring_[(head_ + j) % spec_.n], spec_.m);
    push(next);
    return next;
}

void Generator::generate_into(std::uint64_t* out, std::size_t count) {
    if (count == 0) return;
    // Normalize the ring so the kernel starts at head 0.
    if (spec_.m <= 8)
        bulk_generate<std::uint8_t>(spec_, ring_, head_, out, count);
    else if (spec_.m <= 16)
        bulk_generate<std::uint16_t>(spec_, ring_, head_, out, count);
    else if (spec_.m <= 32)
        bulk_generate<std::uint32_t>(spec_, ring_, head_, out, count);
    else
        bulk_generate<std::uint64_t>(spec_, ring_, head_, out, count);
    time_ += count;
}

MrmmState step_fast(const MrmmState& state, const MrmmSpec& spec) {
    Generator g(spec, state);
    g.step_fast();
    return g.state();
}

MrmmState step_naive(const MrmmState& state, const MrmmSpec& spec) {
    Generator g(spec, state);
    g.step_naive();
    return g.state();
}

std::vector<std::uint64_t> generate(const MrmmSpec& spec, const MrmmState& seed,
                                    std::uint64_t count) {
    Generator g(spec, seed);
    std::vector<std::uint64_t> out(count);
    g.generate_into(out.data(), count);
    return out;
}

std::vector<BitMatrix> reconstruct_coefficient_matrices(const MrmmSpec& spec) {
    std::vector<BitMatrix> cs;
    cs.reserve(spec.n);
    for (unsigned j = 0; j < spec.n; ++j) {
        BitMatrix c(spec.m, spec.m);
        for (unsigned i = 0; i < spec.m; ++i)
            c.set(i, spec.m - 1, (spec.v_cols[j] >> (spec.m - 1 - i)) & 1);
        cs.push_back(std::move(c));
    }
    for (unsigned i = 1; i < spec.m; ++i) cs[0].set(i, i - 1, true);
    return cs;
}

std::uint64_t matvec_packed(const BitMatrix& c, std::uint64_t word, unsigned m) {
    std::uint64_t v_nat = reverse_low_bits(word, m);
    std::uint64_t out = 0;
    for (unsigned r = 0; r < m; ++r) {
        unsigned bit = static_cast<unsigned>(std::popcount(c.row(r)[0] & v_nat)) & 1u;
        out |= static_cast<std::uint64_t>(bit) << (m - 1 - r);
    }
    return out;
}

BitMatrix companion_matrix(const MrmmSpec& spec) {
    const unsigned m = spec.m, n = spec.n;
    auto cs = reconstruct_coefficient_matrices(spec);
    BitMatrix t(static_cast<std::size_t>(m) * n, static_cast<std::size_t>(m) * n);
    // Subdiagonal identity blocks: block(i+1, i) = I_m.
    for (unsigned b = 0; b + 1 < n; ++b)
        for (unsigned r = 0; r < m; ++r)
            t.set(static_cast<std::size_t>(b + 1) * m + r, static_cast<std::size_t>(b) * m + r,
                  true);
    // Last block-column: block(i, n-1) = C_i.
    for (unsigned b = 0; b < n; ++b)
        for (unsigned r = 0; r < m; ++r)
            for (unsigned col = 0; col < m; ++col)
                if (cs[b].get(r, col))
                    t.set(static_cast<std::size_t>(b) * m + r,
                          static_cast<std::size_t>(n - 1) * m + col, true);
    return t;
}

}  // namespace mrmm
