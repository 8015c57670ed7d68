#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "pmac/core.hpp"
#include "pmac/stats.hpp"

namespace pmac {

/// Random source codebook: L balanced partitions over (N, K).
struct SourceCodebook {
    int n_users = 0;
    int n_groups = 0;
    std::vector<PartitionVector> entries;
};

/// Balanced integer split maximizing the product of group sizes:
/// (N mod K) groups of ceil(N/K), then groups of floor(N/K).
GroupSizes optimal_group_sizes(int n, int k);

/// W_N^I = log2 C(N,K) - sum_k log2 n*_k, from exact integers.
double partition_information_bits(int n, int k);

/// Uniform over Z_{K;N}(n_1..n_K): random permutation of 1..N assigned to
/// groups in blocks of the given sizes.
PartitionVector sample_uniform_partition(const GroupSizes& sizes, std::mt19937_64& rng);

SourceCodebook generate_codebook(int n, int k, int l, std::mt19937_64& rng);

/// Smallest index ell with distortion(s, z_ell) == 0; nullopt when no entry
/// separates the active set (a source-coding failure event).
std::optional<int> source_encode(const SourceCodebook& cb, const StatusVector& s);

/// exp(-2^(log2 L - W)).
double theorem1_bound(int l, double w_bits);

struct SourceErrorConfig {
    int n_users = 0;
    int n_active = 0;
    int codebook_size = 1;
    std::int64_t trials = 1;
    std::uint64_t master_seed = 0;
    int threads = 1;
    bool fixed_codebook = false;  // one codebook for all trials instead of a fresh draw per trial
};

struct ErrorEstimate {
    double point = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    std::int64_t trials = 0;
    std::int64_t failures = 0;
};

/// Fraction of NoValidCodeword outcomes over uniform s, Wilson 95% interval.
ErrorEstimate empirical_source_error(const SourceErrorConfig& cfg);

}  // namespace pmac
