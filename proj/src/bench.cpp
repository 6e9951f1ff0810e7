#include "mrmm/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <vector>

#include "mrmm/engine.hpp"
#include "mrmm/error.hpp"

namespace mrmm {

namespace {

MrmmState bench_seed(const MrmmSpec& spec) {
    MrmmState s;
    s.words.resize(spec.n);
    std::uint64_t mask = spec.m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << spec.m) - 1;
    for (unsigned j = 0; j < spec.n; ++j)
        s.words[j] = (0x9E3779B97F4A7C15ull * (j + 1)) & mask;
    if (std::all_of(s.words.begin(), s.words.end(), [](std::uint64_t w) { return w == 0; }))
        s.words[0] = 1;
    return s;
}

std::uint64_t fnv1a(const std::vector<std::uint64_t>& words) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (std::uint64_t w : words)
        for (int b = 0; b < 8; ++b) {
            h ^= (w >> (8 * b)) & 0xFF;
            h *= 0x100000001B3ull;
        }
    return h;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

BenchReport bench(const MrmmSpec& spec, std::uint64_t count) {
    if (count < 1000000) throw InvalidInput("bench needs count >= 10^6 for a stable rate");

    MrmmState seed = bench_seed(spec);
    std::vector<std::uint64_t> buf(count, 0);  // pre-touched by the fill

    // Discarded warmup pass.
    {
        Generator g(spec, seed);
        g.generate_into(buf.data(), count);
    }

    Generator fast(spec, seed);
    auto t0 = std::chrono::steady_clock::now();
    fast.generate_into(buf.data(), count);
    double fast_secs = seconds_since(t0);
    std::uint64_t fast_sum = fnv1a(buf);

    std::fill(buf.begin(), buf.end(), 0);
    {
        Generator g(spec, seed);
        std::uint64_t warm = std::min<std::uint64_t>(count, 100000);
        for (std::uint64_t i = 0; i < warm; ++i) buf[i] = g.step_naive();
    }
    Generator naive(spec, seed);
    t0 = std::chrono::steady_clock::now();
    for (std::uint64_t i = 0; i < count; ++i) buf[i] = naive.step_naive();
    double naive_secs = seconds_since(t0);
    std::uint64_t naive_sum = fnv1a(buf);

    if (fast_sum != naive_sum)
        throw EquivalenceViolation("fast and naive steppers disagree over " +
                                   std::to_string(count) + " words");

    // Structural op counts, sampled on a fresh generator.
    Generator probe(spec, seed);
    std::uint64_t sample = std::min<std::uint64_t>(count, 10000);
    std::uint64_t max_xors = 0, total_shifts = 0;
    for (std::uint64_t i = 0; i < sample; ++i) {
        StepOps one;
        probe.step_fast_counted(one);
        total_shifts += one.shifts;
        max_xors = std::max(max_xors, one.xors);
    }

    BenchReport report;
    std::ostringstream id;
    id << "m=" << spec.m << ",n=" << spec.n << ",f=" << spec.f.to_hex();
    report.spec_id = id.str();
    report.words_generated = count;
    report.fast_rate = fast_secs > 0 ? static_cast<double>(count) / fast_secs : 0;
    report.naive_rate = naive_secs > 0 ? static_cast<double>(count) / naive_secs : 0;
    report.ratio = report.naive_rate > 0 ? report.fast_rate / report.naive_rate : 0;
    report.shifts_per_step = sample > 0 ? total_shifts / sample : 0;
    report.max_xors_per_step = max_xors;
    return report;
}

}  // namespace mrmm
