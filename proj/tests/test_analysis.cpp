#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mrmm/analysis.hpp"
#include "mrmm/error.hpp"
#include "mrmm/horner.hpp"
#include "mrmm/search.hpp"
#include "oracles.hpp"

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

// Regenerate `total` bits from the characteristic-form connection polynomial
// and the first lc bits; mirror of the report contract.
std::vector<std::uint8_t> regenerate(const mrmm::LinearComplexityReport& report,
                                     std::span<const std::uint8_t> bits, std::size_t total) {
    std::vector<std::uint8_t> fill(bits.begin(),
                                   bits.begin() + static_cast<std::ptrdiff_t>(report.lc));
    if (report.lc == 0) return std::vector<std::uint8_t>(total, 0);
    return oracle::lfsr_bits(report.connection, std::move(fill), total);
}

std::vector<std::uint8_t> to_bits(std::initializer_list<int> xs) {
    std::vector<std::uint8_t> out;
    for (int x : xs) out.push_back(static_cast<std::uint8_t>(x));
    return out;
}

}  // namespace

TEST_CASE("berlekamp_massey basics") {
    CHECK_THROWS_AS(mrmm::berlekamp_massey({}), mrmm::InvalidInput);

    auto zeros = std::vector<std::uint8_t>(32, 0);
    auto zr = mrmm::berlekamp_massey(zeros);
    CHECK(zr.lc == 0);
    CHECK(zr.bits_consumed == 32);

    auto seq = oracle::lfsr_bits(PolyF2::from_bits(0b10011), {0, 0, 0, 1}, 16);
    CHECK(seq == to_bits({0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1, 0}));
    auto report = mrmm::berlekamp_massey(seq);
    CHECK(report.lc == 4);
    CHECK(report.connection == PolyF2::from_bits(0b10011));
    CHECK(report.bits_consumed == 16);
}

TEST_CASE("berlekamp_massey report invariants on random LFSRs") {
    mrmm::Rng rng(51);
    for (int trial = 0; trial < 500; ++trial) {
        unsigned d = 1 + static_cast<unsigned>(rng() % 16);
        PolyF2 f = PolyF2::monomial(d);
        f.set_coeff(0, true);
        for (unsigned i = 1; i < d; ++i)
            if (rng() & 1) f.set_coeff(i, true);
        std::vector<std::uint8_t> fill(d);
        bool nonzero = false;
        for (auto& b : fill) {
            b = static_cast<std::uint8_t>(rng() & 1);
            nonzero |= b != 0;
        }
        if (!nonzero) fill[0] = 1;
        auto bits = oracle::lfsr_bits(f, fill, 2 * d);
        auto report = mrmm::berlekamp_massey(bits);

        CHECK(report.lc <= d);
        if (report.lc > 0) CHECK(report.connection.degree() == std::size_t{report.lc});
        // The reported recurrence regenerates the observed prefix.
        CHECK(regenerate(report, bits, bits.size()) == bits);
        // Full length reached exactly when the seeding polynomial is minimal.
        if (report.lc == d) CHECK(report.connection == f);
    }
}

TEST_CASE("coordinate_stream picks the right bit") {
    std::vector<std::uint64_t> words{0b1000};
    CHECK(mrmm::coordinate_stream(words, 4, 1) == to_bits({1}));
    CHECK(mrmm::coordinate_stream(words, 4, 2) == to_bits({0}));
    CHECK(mrmm::coordinate_stream(words, 4, 4) == to_bits({0}));
    CHECK_THROWS_AS(mrmm::coordinate_stream(words, 4, 0), mrmm::InvalidInput);
    CHECK_THROWS_AS(mrmm::coordinate_stream(words, 4, 5), mrmm::InvalidInput);
}

TEST_CASE("coordinate streams of the example spec have complexity mn and connection f") {
    MrmmSpec spec = example_spec();
    auto words = mrmm::generate(spec, state_of({0b0001, 0b0000, 0b0000}), 128);
    for (unsigned j = 1; j <= 4; ++j) {
        auto bits = mrmm::coordinate_stream(words, 4, j);
        auto report = mrmm::berlekamp_massey(bits);
        CHECK(report.lc == 12);
        CHECK(report.connection == spec.f);
    }
}

TEST_CASE("interleaved coordinates of a small spec reach complexity m^2 n") {
    auto factors = mrmm::factor_2d_minus_1(6);
    mrmm::Rng rng(77);
    auto spec = mrmm::find_primitive_mrmm(2, 3, factors, rng).spec;
    auto words = mrmm::generate(spec, state_of({0b01, 0b00, 0b00}), 96);
    std::vector<std::uint8_t> flat;
    for (std::uint64_t w : words)
        for (unsigned j = 1; j <= 2; ++j) flat.push_back(static_cast<std::uint8_t>((w >> (2 - j)) & 1));
    auto report = mrmm::berlekamp_massey(flat);
    CHECK(report.lc == 12);  // m^2 n = 4 * 3
}

TEST_CASE("measure_period spec values") {
    CHECK(mrmm::measure_period(example_spec(), state_of({0b0001, 0, 0})) == 4095);
    CHECK(mrmm::measure_period(example_spec(), state_of({0, 0, 0})) == 1);

    auto factors = mrmm::factor_2d_minus_1(4);
    mrmm::Rng rng(8);
    auto tiny = mrmm::find_primitive_mrmm(1, 4, factors, rng).spec;
    CHECK(mrmm::measure_period(tiny, state_of({1, 0, 0, 0})) == 15);
}

TEST_CASE("measure_period guards the state space") {
    PolyF2 f = PolyF2::monomial(25);
    f.set_coeff(0, true);
    f.set_coeff(3, true);
    auto spec = mrmm::extract_spec(f, 5, 5);
    CHECK_THROWS_AS(mrmm::measure_period(spec, state_of({1, 0, 0, 0, 0})), mrmm::ResourceGuard);
}

TEST_CASE("verify_spec passes the example and localizes failures") {
    auto factors = mrmm::factor_2d_minus_1(12);
    auto ok = mrmm::verify_spec(example_spec(), factors);
    CHECK(ok.char_poly_ok);
    CHECK(ok.primitive_ok);
    CHECK(ok.c0_nonsingular_ok);
    CHECK(ok.all());

    // One flipped bit in V^1 breaks the characteristic-polynomial identity.
    MrmmSpec bent = MrmmSpec::create(4, 3, PolyF2::from_bits(0x1CA5), {0x8, 0x7, 0xD});
    auto bad = mrmm::verify_spec(bent, factors);
    CHECK_FALSE(bad.char_poly_ok);
    CHECK_FALSE(bad.all());
    CHECK(bad.c0_nonsingular_ok);

    // Irreducible but imprimitive characteristic polynomial.
    auto f4 = mrmm::factor_2d_minus_1(4);
    auto imprimitive = mrmm::extract_spec(PolyF2::from_bits(0b11111), 2, 2);
    auto rep = mrmm::verify_spec(imprimitive, f4);
    CHECK(rep.char_poly_ok);
    CHECK_FALSE(rep.primitive_ok);
    CHECK(rep.c0_nonsingular_ok);

    CHECK_THROWS_AS(mrmm::verify_spec(example_spec(), f4), mrmm::InvalidInput);
}

TEST_CASE("Prop 2.4 equivalence at small scale") {
    // For every monic f with constant term 1 at a few (m, n) shapes:
    // full measured period <=> verify_spec passes entirely.
    const std::pair<unsigned, unsigned> shapes[] = {{2, 2}, {1, 4}, {3, 2}, {2, 3}, {4, 2}, {2, 4}, {3, 3}};
    for (auto [m, n] : shapes) {
        unsigned d = m * n;
        auto factors = mrmm::factor_2d_minus_1(d);
        std::uint64_t full = (std::uint64_t{1} << d) - 1;
        int primitive_count = 0;
        for (std::uint64_t mid = 0; mid < (std::uint64_t{1} << (d - 1)); ++mid) {
            PolyF2 f = PolyF2::from_bits((std::uint64_t{1} << d) | (mid << 1) | 1);
            if (!mrmm::is_irreducible(f)) continue;
            auto spec = mrmm::extract_spec(f, m, n);
            auto report = mrmm::verify_spec(spec, factors);
            CHECK(report.char_poly_ok);  // holds by construction for any Horner-extracted spec
            CHECK(report.c0_nonsingular_ok);
            std::vector<std::uint64_t> words(n, 0);
            words[0] = 1;
            std::uint64_t period = mrmm::measure_period(spec, state_of(words));
            CHECK((period == full) == report.all());
            CHECK(full % period == 0);  // Prop 2.2: period divides 2^mn - 1
            if (report.all()) ++primitive_count;
        }
        CHECK(primitive_count > 0);
    }
}
