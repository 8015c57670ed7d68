#pragma once

#include <cstdint>
#include <random>

namespace pmac {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Independent stream for one trial, derived from (master seed, trial index).
/// Results are identical no matter how trials are scheduled across threads.
inline std::mt19937_64 trial_stream(std::uint64_t master_seed, std::uint64_t trial) {
    return std::mt19937_64(splitmix64(master_seed ^ splitmix64(trial)));
}

/// Bernoulli(p) draw; avoids std::bernoulli_distribution so the bit stream is
/// pinned to the raw engine output.
inline bool bernoulli(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

/// Uniform integer in [0, bound), rejection sampled.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

}  // namespace pmac
