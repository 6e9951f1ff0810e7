#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mrmm/bench.hpp"
#include "mrmm/error.hpp"
#include "mrmm/spec.hpp"

using namespace mrmm;

namespace {

MrmmSpec example_spec() {
    return MrmmSpec::create(4, 3, PolyF2::from_hex("0x1CA5"), {0x8, 0x3, 0xD});
}

}  // namespace

TEST_CASE("bench rejects counts below one million") {
    CHECK_THROWS_AS(bench(example_spec(), 0), InvalidInput);
    CHECK_THROWS_AS(bench(example_spec(), 999999), InvalidInput);
}

TEST_CASE("bench on the example spec: checksums agree and the report is coherent") {
    BenchReport r = bench(example_spec(), 1000000);  // throws on checksum mismatch
    CHECK(r.spec_id == "m=4,n=3,f=0x1CA5");
    CHECK(r.words_generated == 1000000);
    CHECK(r.fast_rate > 0);
    CHECK(r.naive_rate > 0);
    CHECK(r.ratio > 0);
    CHECK(r.shifts_per_step == 1);
    CHECK(r.max_xors_per_step <= 3);
}
