#include "mrmm/cli.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mrmm/analysis.hpp"
#include "mrmm/bench.hpp"
#include "mrmm/engine.hpp"
#include "mrmm/error.hpp"
#include "mrmm/factor.hpp"
#include "mrmm/horner.hpp"
#include "mrmm/langford.hpp"
#include "mrmm/search.hpp"
#include "mrmm/spec.hpp"

namespace mrmm::cli {

namespace {

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

MrmmSpec load_spec_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open spec file: " + path);
    return load_spec(f);
}

FactorSet load_factors_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open factors file: " + path);
    return load_factor_set(f);
}

/// --factors FILE when given, otherwise the built-in factorizer.
FactorSet resolve_factors(const std::string& path, unsigned d) {
    if (!path.empty()) return load_factors_file(path);
    return factor_2d_minus_1(d);
}

/// Comma-separated hex words in s_0..s_{n-1} order.
MrmmState parse_state(const std::string& text, const MrmmSpec& spec) {
    MrmmState state;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            state.words.push_back(std::stoull(tok, &used, 16));
            if (used != tok.size()) throw FormatError("bad state word: " + tok);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw FormatError("bad state word: " + tok);
        }
    }
    validate_state(state, spec);
    return state;
}

MrmmState default_state(const MrmmSpec& spec) {
    MrmmState state;
    state.words.assign(spec.n, 0);
    state.words[0] = 1;
    return state;
}

std::string word_hex(std::uint64_t w) {
    std::ostringstream o;
    o << "0x" << std::uppercase << std::hex << w;
    return o.str();
}

void emit_words(std::ostream& out, const std::uint64_t* words, std::size_t count, unsigned m,
                const std::string& format) {
    if (format == "hex") {
        for (std::size_t i = 0; i < count; ++i) out << word_hex(words[i]) << '\n';
    } else if (format == "bits") {
        for (std::size_t i = 0; i < count; ++i) {
            for (unsigned b = 0; b < m; ++b) out << char('0' + ((words[i] >> b) & 1));
            out << '\n';
        }
    } else {  // raw: ceil(m/8) little-endian bytes per word
        unsigned bytes = (m + 7) / 8;
        for (std::size_t i = 0; i < count; ++i)
            for (unsigned k = 0; k < bytes; ++k)
                out.put(static_cast<char>((words[i] >> (8 * k)) & 0xFF));
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// First-success-wins parallel search. Worker 0 reuses `seed` verbatim so
/// --jobs 1 is byte-identical to the sequential path; losers are cancelled
/// cooperatively.
SearchResult parallel_search(unsigned m, unsigned n, const FactorSet& factors, std::uint64_t seed,
                             unsigned jobs, std::optional<std::uint64_t> max_iters) {
    if (jobs == 1) {
        Rng rng(seed);
        return find_primitive_mrmm(m, n, factors, rng, max_iters);
    }
    std::stop_source stopper;
    std::mutex mu;
    std::optional<SearchResult> winner;
    std::exception_ptr failure;
    unsigned exhausted = 0;
    std::uint64_t exhausted_iters = 0;
    {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            pool.emplace_back([&, w] {
                Rng rng(w == 0 ? seed : splitmix64(seed + w));
                try {
                    SearchResult r =
                        find_primitive_mrmm(m, n, factors, rng, max_iters, stopper.get_token());
                    std::scoped_lock lock(mu);
                    if (!winner) {
                        winner = std::move(r);
                        stopper.request_stop();
                    }
                } catch (const Cancelled&) {
                } catch (const SearchExhausted& e) {
                    std::scoped_lock lock(mu);
                    ++exhausted;
                    exhausted_iters += e.iterations;
                } catch (...) {
                    std::scoped_lock lock(mu);
                    if (!failure) failure = std::current_exception();
                    stopper.request_stop();
                }
            });
        }
    }
    if (winner) return *std::move(winner);
    if (failure) std::rethrow_exception(failure);
    throw SearchExhausted("all " + std::to_string(exhausted) + " jobs exhausted without a hit",
                          exhausted_iters);
}

struct GenArgs {
    std::string spec_path;
    std::string state_text;
    std::uint64_t count = 16;
    std::string format = "hex";
};

void add_gen_options(CLI::App* cmd, GenArgs& a) {
    cmd->add_option("--spec", a.spec_path, "spec file")->required();
    cmd->add_option("--state", a.state_text, "initial state s_0..s_{n-1}, comma-separated hex");
    cmd->add_option("--count", a.count, "words to emit");
    cmd->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"bits", "hex", "raw"}));
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
    MrmmSpec spec = load_spec_file(a.spec_path);
    MrmmState seed = a.state_text.empty() ? default_state(spec) : parse_state(a.state_text, spec);
    Generator gen(spec, seed);
    std::vector<std::uint64_t> buf(std::min<std::uint64_t>(a.count, 65536));
    std::uint64_t left = a.count;
    while (left > 0) {
        std::size_t chunk = static_cast<std::size_t>(std::min<std::uint64_t>(left, buf.size()));
        gen.generate_into(buf.data(), chunk);
        emit_words(out, buf.data(), chunk, spec.m, a.format);
        left -= chunk;
    }
    return 0;
}

int cmd_tweak(const GenArgs& a, std::ostream& out) {
    MrmmSpec spec = load_spec_file(a.spec_path);
    if (spec.n % 2 != 0)
        throw InvalidInput("tweak unavailable: order n = " + std::to_string(spec.n) +
                           " is odd (need n = 2g)");
    unsigned g = spec.n / 2;
    auto arr = find_langford(g);
    if (!arr)
        throw InvalidInput("tweak unavailable: no Langford arrangement of order g = " +
                           std::to_string(g));
    MrmmState seed = a.state_text.empty() ? default_state(spec) : parse_state(a.state_text, spec);
    std::vector<std::uint64_t> t = tweaked_stream(spec, *arr, seed, a.count);
    emit_words(out, t.data(), t.size(), spec.m, a.format);
    return 0;
}

void analyze_line(std::ostream& out, const std::string& name, bool pass, std::uint64_t value,
                  unsigned& failures) {
    out << "check=" << name << " status=" << (pass ? "pass" : "fail") << " value=" << value
        << '\n';
    if (!pass) ++failures;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    (void)in;
    CLI::App app{"Primitive MRMM vector generators over GF(2)"};
    app.require_subcommand(1);

    unsigned m = 0, n = 0, g = 0, d = 0, jobs = 1;
    std::uint64_t seed = 0, max_iters = 0, bench_count = 1000000;
    std::string factors_path, spec_path, state_text;
    bool want_period = false, want_lc = false, want_verify = false;
    GenArgs gen_args, tweak_args;

    CLI::App* search = app.add_subcommand("search", "find a primitive spec by randomized search");
    search->add_option("-m", m, "word width")->required();
    search->add_option("-n", n, "order")->required();
    search->add_option("--seed", seed, "search RNG seed");
    search->add_option("--factors", factors_path, "factor file for 2^(mn)-1");
    search->add_option("--jobs", jobs, "parallel seeded searches, first success wins")
        ->check(CLI::PositiveNumber);
    CLI::Option* max_iters_opt =
        search->add_option("--max-iters", max_iters, "candidate budget per job");

    CLI::App* gen = app.add_subcommand("gen", "emit the keystream of a spec");
    add_gen_options(gen, gen_args);

    CLI::App* tweak = app.add_subcommand("tweak", "emit the Langford-tweaked stream");
    add_gen_options(tweak, tweak_args);

    CLI::App* analyze = app.add_subcommand("analyze", "verify/measure a spec");
    analyze->add_option("--spec", spec_path, "spec file")->required();
    analyze->add_option("--factors", factors_path, "factor file for 2^(mn)-1");
    analyze->add_option("--state", state_text, "state for --period, comma-separated hex");
    analyze->add_flag("--period", want_period, "measure the state period");
    analyze->add_flag("--lc", want_lc, "Berlekamp-Massey each coordinate stream");
    analyze->add_flag("--verify", want_verify, "characteristic polynomial / primitivity / C_0");

    CLI::App* langford = app.add_subcommand("langford", "find a Langford arrangement");
    langford->add_option("-g", g, "order")->required();

    CLI::App* bench_cmd = app.add_subcommand("bench", "fast vs naive stepper throughput");
    bench_cmd->add_option("--spec", spec_path, "spec file");
    bench_cmd->add_option("-m", m, "word width (random spec)");
    bench_cmd->add_option("-n", n, "order (random spec)");
    bench_cmd->add_option("--seed", seed, "random-spec RNG seed");
    bench_cmd->add_option("--count", bench_count, "words per timed pass");

    CLI::App* factors_cmd = app.add_subcommand("factors", "factor 2^d - 1");
    factors_cmd->add_option("-d", d, "exponent")->required();

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("mrmm");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return 2;
    }

    try {
        if (*search) {
            FactorSet factors = resolve_factors(factors_path, m * n);
            std::optional<std::uint64_t> budget;
            if (max_iters_opt->count() > 0) budget = max_iters;
            SearchResult result = parallel_search(m, n, factors, seed, jobs, budget);
            save_spec(result.spec, out);
        } else if (*gen) {
            return cmd_gen(gen_args, out);
        } else if (*tweak) {
            return cmd_tweak(tweak_args, out);
        } else if (*analyze) {
            MrmmSpec spec = load_spec_file(spec_path);
            if (!want_period && !want_lc && !want_verify) want_verify = true;
            unsigned failures = 0;
            unsigned mn = spec.m * spec.n;
            if (want_verify) {
                FactorSet factors = resolve_factors(factors_path, mn);
                VerifyReport report = verify_spec(spec, factors);
                analyze_line(out, "char_poly", report.char_poly_ok, report.char_poly_ok, failures);
                analyze_line(out, "primitive", report.primitive_ok, report.primitive_ok, failures);
                analyze_line(out, "c0_nonsingular", report.c0_nonsingular_ok,
                             report.c0_nonsingular_ok, failures);
            }
            if (want_period) {
                MrmmState st =
                    state_text.empty() ? default_state(spec) : parse_state(state_text, spec);
                std::uint64_t period = measure_period(spec, st);
                bool full_period = mn < 64 && period == (std::uint64_t{1} << mn) - 1;
                analyze_line(out, "period", full_period, period, failures);
            }
            if (want_lc) {
                std::uint64_t len = default_bm_sample(mn);
                MrmmState st =
                    state_text.empty() ? default_state(spec) : parse_state(state_text, spec);
                std::vector<std::uint64_t> words(len);
                for (unsigned j = 0; j < spec.n; ++j) words[j] = st.words[j];
                Generator generator(spec, st);
                generator.generate_into(words.data() + spec.n, len - spec.n);
                for (unsigned j = 1; j <= spec.m; ++j) {
                    auto bits = coordinate_stream(words, spec.m, j);
                    auto report = berlekamp_massey(bits);
                    analyze_line(out, "lc_" + std::to_string(j), report.lc == mn, report.lc,
                                 failures);
                }
            }
            if (failures > 0) {
                err << "error: " << failures << " check(s) failed\n";
                return 1;
            }
        } else if (*langford) {
            auto arr = find_langford(g);
            if (!arr) {
                out << "none\n";
            } else {
                for (std::size_t i = 0; i < arr->seq.size(); ++i)
                    out << (i ? " " : "") << arr->seq[i];
                out << '\n';
            }
        } else if (*bench_cmd) {
            MrmmSpec spec;
            if (!spec_path.empty()) {
                spec = load_spec_file(spec_path);
            } else if (m > 0 && n > 0) {
                Rng rng(seed);
                spec = extract_spec(random_monic_poly(m * n, rng), m, n);
            } else {
                err << "error: bench needs --spec or both -m and -n\n";
                return 2;
            }
            BenchReport report = bench(spec, bench_count);
            out << "spec_id=" << report.spec_id << '\n'
                << "words_generated=" << report.words_generated << '\n'
                << std::fixed << std::setprecision(0) << "fast_rate=" << report.fast_rate << '\n'
                << "naive_rate=" << report.naive_rate << '\n'
                << std::setprecision(3) << "ratio=" << report.ratio << '\n'
                << "shifts_per_step=" << report.shifts_per_step << '\n'
                << "max_xors_per_step=" << report.max_xors_per_step << '\n';
        } else if (*factors_cmd) {
            save_factor_set(factor_2d_minus_1(d), out);
        }
    } catch (const Error& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return 1;
    }
    return 0;
}

}  // namespace mrmm::cli
