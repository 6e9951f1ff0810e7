#include "mrmm/langford.hpp"

#include <algorithm>

#include "mrmm/error.hpp"

namespace mrmm {

namespace {

bool place(std::vector<unsigned>& slots, unsigned k) {
    if (k == 0) return true;
    unsigned size = static_cast<unsigned>(slots.size());
    for (unsigned l = 0; l + k + 1 < size; ++l) {
        if (slots[l] == 0 && slots[l + k + 1] == 0) {
            slots[l] = slots[l + k + 1] = k;
            if (place(slots, k - 1)) return true;
            slots[l] = slots[l + k + 1] = 0;
        }
    }
    return false;
}

}  // namespace

LangfordArrangement LangfordArrangement::from_sequence(std::vector<unsigned> seq) {
    if (seq.empty() || seq.size() % 2 != 0)
        throw InvalidInput("arrangement length must be a positive even number");
    unsigned g = static_cast<unsigned>(seq.size() / 2);
    std::vector<unsigned> first(g + 1, 0);
    std::vector<unsigned> count(g + 1, 0);
    for (unsigned pos = 0; pos < seq.size(); ++pos) {
        unsigned k = seq[pos];
        if (k < 1 || k > g)
            throw InvalidInput("arrangement entry " + std::to_string(k) + " outside 1.." +
                               std::to_string(g));
        if (count[k] == 0) {
            first[k] = pos + 1;
        } else if (count[k] == 1) {
            unsigned r = pos + 1;
            if (r != first[k] + k + 1)
                throw InvalidInput("occurrences of " + std::to_string(k) +
                                   " are not k+1 positions apart");
        } else {
            throw InvalidInput("entry " + std::to_string(k) + " appears more than twice");
        }
        ++count[k];
    }
    for (unsigned k = 1; k <= g; ++k)
        if (count[k] != 2)
            throw InvalidInput("entry " + std::to_string(k) + " must appear exactly twice");
    LangfordArrangement arr;
    arr.g = g;
    arr.seq = std::move(seq);
    return arr;
}

std::optional<LangfordArrangement> find_langford(unsigned g) {
    if (g < 1) throw InvalidInput("g must be >= 1");
    std::vector<unsigned> slots(2 * g, 0);
    if (!place(slots, g)) return std::nullopt;
    return LangfordArrangement::from_sequence(std::move(slots));
}

std::vector<std::pair<unsigned, unsigned>> positions(const LangfordArrangement& arr) {
    // Revalidate: the struct's fields are public, so a hand-rolled value may
    // not satisfy the invariants.
    LangfordArrangement checked = LangfordArrangement::from_sequence(arr.seq);
    std::vector<std::pair<unsigned, unsigned>> out(checked.g);
    std::vector<bool> seen(checked.g + 1, false);
    for (unsigned pos = 0; pos < checked.seq.size(); ++pos) {
        unsigned k = checked.seq[pos];
        if (!seen[k]) {
            out[k - 1] = {pos + 1, pos + 1 + k + 1};
            seen[k] = true;
        }
    }
    return out;
}

namespace {

std::vector<std::uint64_t> underlying_sequence(const MrmmSpec& spec, const LangfordArrangement& arr,
                                               const MrmmState& seed, std::uint64_t count) {
    if (spec.n != 2 * arr.g)
        throw InvalidInput("tweak needs spec order n = 2g = " + std::to_string(2 * arr.g) +
                           ", got n = " + std::to_string(spec.n));
    validate_state(seed, spec);
    std::vector<std::uint64_t> s = seed.words;
    if (count > 1) {
        auto tail = generate(spec, seed, count - 1);
        s.insert(s.end(), tail.begin(), tail.end());
    }
    return s;
}

}  // namespace

std::vector<std::uint64_t> u_stream(const MrmmSpec& spec, const LangfordArrangement& arr,
                                    const MrmmState& seed, std::uint64_t count) {
    auto s = underlying_sequence(spec, arr, seed, count);
    auto pos = positions(arr);
    std::vector<std::uint64_t> u(count);
    unsigned two_g = 2 * arr.g;
    for (std::uint64_t j = 0; j < count; ++j) {
        std::uint64_t acc = 0;
        for (auto [l, r] : pos) acc ^= s[two_g + j - l] & s[two_g + j - r];
        u[j] = acc;
    }
    return u;
}

std::vector<std::uint64_t> tweaked_stream(const MrmmSpec& spec, const LangfordArrangement& arr,
                                          const MrmmState& seed, std::uint64_t count) {
    auto t = u_stream(spec, arr, seed, count);
    for (std::uint64_t i = 1; i < count; ++i) t[i] ^= t[i - 1];
    return t;
}

}  // namespace mrmm
