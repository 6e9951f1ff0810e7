#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mrmm/engine.hpp"
#include "mrmm/error.hpp"
#include "mrmm/horner.hpp"
#include "mrmm/primitive.hpp"
#include "oracles.hpp"

using mrmm::BitMatrix;
using mrmm::Generator;
using mrmm::MrmmSpec;
using mrmm::MrmmState;
using mrmm::PolyF2;

namespace {

MrmmSpec example_spec() {
    return MrmmSpec::create(4, 3, PolyF2::from_bits(0x1CA5), {0x8, 0x3, 0xD});
}

MrmmState state_of(std::vector<std::uint64_t> words) {
    MrmmState s;
    s.words = std::move(words);
    return s;
}

// Companion-matrix action on the block state: next block j = sum over i of
// block(i, j) applied to s_i. Independent of the steppers.
std::vector<std::uint64_t> companion_action(const BitMatrix& t, const std::vector<std::uint64_t>& s,
                                            unsigned m, unsigned n) {
    std::vector<std::uint64_t> next(n, 0);
    for (unsigned bj = 0; bj < n; ++bj) {
        for (unsigned bi = 0; bi < n; ++bi) {
            BitMatrix block(m, m);
            bool nonzero = false;
            for (unsigned r = 0; r < m; ++r)
                for (unsigned c = 0; c < m; ++c)
                    if (t.get(static_cast<std::size_t>(bi) * m + r,
                              static_cast<std::size_t>(bj) * m + c)) {
                        block.set(r, c, true);
                        nonzero = true;
                    }
            if (nonzero) next[bj] ^= mrmm::matvec_packed(block, s[bi], m);
        }
    }
    return next;
}

MrmmSpec random_structural_spec(mrmm::Rng& rng, unsigned m, unsigned n) {
    PolyF2 f = PolyF2::monomial(static_cast<std::size_t>(m) * n);
    for (unsigned i = 1; i < m * n; ++i)
        if (rng() & 1) f.set_coeff(i, true);
    f.set_coeff(0, true);
    return mrmm::extract_spec(f, m, n);
}

std::uint64_t mask_m(mrmm::Rng& rng, unsigned m) {
    return m == 64 ? rng() : rng() & ((std::uint64_t{1} << m) - 1);
}

}  // namespace

TEST_CASE("fast step golden trace") {
    Generator g(example_spec(), state_of({0b0001, 0, 0}));
    CHECK(g.step_fast() == 0b1000);
    MrmmState after = g.state();
    CHECK(after.words == std::vector<std::uint64_t>{0, 0, 0b1000});
    CHECK(after.time == 1);

    // No selector bits set and zero first word: pure shift of zero.
    Generator h(example_spec(), state_of({0, 0, 0b0010}));
    CHECK(h.step_fast() == 0);
}

TEST_CASE("functional step wrappers") {
    MrmmState s1 = mrmm::step_fast(state_of({0b0001, 0, 0}), example_spec());
    CHECK(s1.words == std::vector<std::uint64_t>{0, 0, 0b1000});
    CHECK(s1.time == 1);
    MrmmState s2 = mrmm::step_naive(state_of({0b0001, 0, 0}), example_spec());
    CHECK(s2 == s1);
}

TEST_CASE("zero state is absorbing") {
    Generator g(example_spec(), state_of({0, 0, 0}));
    for (int i = 0; i < 20; ++i) CHECK(g.step_fast() == 0);
    Generator h(example_spec(), state_of({0, 0, 0}));
    for (int i = 0; i < 20; ++i) CHECK(h.step_naive() == 0);
}

TEST_CASE("state validation") {
    CHECK_THROWS_AS(Generator(example_spec(), state_of({1, 0})), mrmm::InvalidInput);
    CHECK_THROWS_AS(Generator(example_spec(), state_of({0x10, 0, 0})), mrmm::InvalidInput);
    CHECK_NOTHROW(Generator(example_spec(), state_of({0xF, 0xF, 0xF})));
}

TEST_CASE("companion matrix goldens") {
    auto tiny = MrmmSpec::create(1, 2, PolyF2::from_bits(0b111), {1, 1});
    BitMatrix t = mrmm::companion_matrix(tiny);
    REQUIRE(t.rows() == 2);
    CHECK_FALSE(t.get(0, 0));
    CHECK(t.get(0, 1));
    CHECK(t.get(1, 0));
    CHECK(t.get(1, 1));
}

TEST_CASE("companion matrix block layout for the worked example") {
    MrmmSpec spec = example_spec();
    BitMatrix t = mrmm::companion_matrix(spec);
    REQUIRE(t.rows() == 12);
    auto cs = mrmm::reconstruct_coefficient_matrices(spec);
    for (unsigned bi = 0; bi < 3; ++bi)
        for (unsigned bj = 0; bj < 3; ++bj)
            for (unsigned r = 0; r < 4; ++r)
                for (unsigned c = 0; c < 4; ++c) {
                    bool got = t.get(bi * 4 + r, bj * 4 + c);
                    bool want = false;
                    if (bj == 2)
                        want = cs[bi].get(r, c);  // last block-column holds C_i
                    else if (bi == bj + 1)
                        want = r == c;  // subdiagonal identity
                    CHECK(got == want);
                }
    CHECK(t.nonsingular());
}

TEST_CASE("reconstructed C_0 is nonsingular and matches the construct module") {
    mrmm::Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        unsigned m = 1 + static_cast<unsigned>(rng() % 10);
        unsigned n = 1 + static_cast<unsigned>(rng() % 4);
        MrmmSpec spec = random_structural_spec(rng, m, n);
        auto cs = mrmm::reconstruct_coefficient_matrices(spec);
        CHECK(cs[0].nonsingular());
        auto built = mrmm::horner_matrix(spec.f, m, n);
        for (unsigned j = 0; j < n; ++j) CHECK(cs[j] == built[j]);
    }
}

TEST_CASE("three-way stepper equivalence on random specs and states") {
    mrmm::Rng rng(22);
    const std::pair<unsigned, unsigned> shapes[] = {{1, 4}, {2, 2}, {4, 3}, {7, 2}, {8, 4}, {13, 3}};
    for (auto [m, n] : shapes) {
        for (int trial = 0; trial < 5; ++trial) {
            MrmmSpec spec = random_structural_spec(rng, m, n);
            BitMatrix t = mrmm::companion_matrix(spec);
            std::vector<std::uint64_t> words(n);
            for (auto& w : words) w = mask_m(rng, m);
            Generator fast(spec, state_of(words));
            Generator naive(spec, state_of(words));
            std::vector<std::uint64_t> shadow = words;
            for (int step = 0; step < 100; ++step) {
                std::uint64_t a = fast.step_fast();
                std::uint64_t b = naive.step_naive();
                shadow = companion_action(t, shadow, m, n);
                CHECK(a == b);
                CHECK(shadow == fast.state().words);
            }
        }
    }
}

TEST_CASE("generate matches repeated stepping across kernel widths") {
    mrmm::Rng rng(23);
    for (unsigned m : {3u, 8u, 12u, 16u, 21u, 32u, 40u, 64u}) {
        unsigned n = 2 + static_cast<unsigned>(rng() % 3);
        MrmmSpec spec = random_structural_spec(rng, m, n);
        std::vector<std::uint64_t> words(n);
        for (auto& w : words) w = mask_m(rng, m);
        auto bulk = mrmm::generate(spec, state_of(words), 500);
        Generator g(spec, state_of(words));
        for (int i = 0; i < 500; ++i) CHECK(bulk[i] == g.step_fast());
    }
}

TEST_CASE("generate golden and edge cases") {
    CHECK(mrmm::generate(example_spec(), state_of({0b0001, 0, 0}), 0).empty());
    auto one = mrmm::generate(example_spec(), state_of({0b0001, 0, 0}), 1);
    CHECK(one == std::vector<std::uint64_t>{0b1000});
}

TEST_CASE("generator state survives interleaved bulk and single stepping") {
    MrmmSpec spec = example_spec();
    Generator a(spec, state_of({0b0001, 0b0100, 0b1111}));
    Generator b(spec, state_of({0b0001, 0b0100, 0b1111}));
    std::vector<std::uint64_t> bulk(7);
    a.generate_into(bulk.data(), 7);
    for (int i = 0; i < 7; ++i) CHECK(bulk[i] == b.step_fast());
    CHECK(a.state() == b.state());
    CHECK(a.state().time == 7);
    for (int i = 0; i < 5; ++i) CHECK(a.step_fast() == b.step_fast());
}

TEST_CASE("primitive spec visits the full nonzero state space") {
    MrmmSpec spec = example_spec();
    Generator g(spec, state_of({0b0001, 0, 0}));
    std::set<std::vector<std::uint64_t>> seen;
    seen.insert(g.state().words);
    for (int i = 1; i < 4095; ++i) {
        g.step_fast();
        CHECK(seen.insert(g.state().words).second);
    }
    g.step_fast();
    CHECK(g.state().words == std::vector<std::uint64_t>{0b0001, 0, 0});
}

TEST_CASE("instrumented step counts one shift and at most n xors") {
    mrmm::Rng rng(24);
    MrmmSpec spec = example_spec();
    mrmm::StepOps ops;
    Generator g(spec, state_of({0b0001, 0b1010, 0b0111}));
    const int steps = 1000;
    for (int i = 0; i < steps; ++i) {
        mrmm::StepOps one;
        Generator probe(spec, g.state());
        probe.step_fast_counted(one);
        CHECK(one.shifts == 1);
        CHECK(one.xors <= spec.n);
        g.step_fast_counted(ops);
    }
    CHECK(ops.shifts == static_cast<std::uint64_t>(steps));
    CHECK(ops.xors <= static_cast<std::uint64_t>(steps) * spec.n);
    (void)rng;
}
