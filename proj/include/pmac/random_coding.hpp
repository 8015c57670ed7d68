#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "pmac/source_coding.hpp"

namespace pmac {

enum class DecoderKind { map, bipartite_k2, brute_force };

struct TrialConfig {
    int n_users = 0;
    int n_active = 2;
    int n_slots = 1;           // ignored for brute-force (T = K*L)
    double bernoulli_p = 0.5;  // ignored for brute-force
    std::int64_t trials = 1;
    std::uint64_t master_seed = 0;
    DecoderKind decoder = DecoderKind::bipartite_k2;
    int codebook_size = 0;  // brute-force only
    int threads = 1;
    bool randomize_status = false;  // default: fixed s_0 = {1..K}
    bool fixed_codebook = false;    // one matrix/codebook across trials
};

/// N x T matrix with i.i.d. Bernoulli(p) entries.
AccessMatrix bernoulli_matrix(int n, int t, double p, std::mt19937_64& rng);

/// MAP decoding by direct posterior counting: the z maximizing the number of
/// candidate status vectors it separates, over all of Z_{K;N}, lexicographic
/// tie-break. Exhaustive; small instances only.
PartitionVector map_decode(int n, int k, const AccessMatrix& x, const Feedback& y);

/// Suboptimal K=2 decoder: reduce to H', two-color it if bipartite, else
/// announce failure.
std::optional<PartitionVector> bipartite_decode_k2(int n, const AccessMatrix& x, const Feedback& y);

/// T = ceil(log2(N) / (C(p) - xi)).
int slots_for_rate(int n, double p, double xi);

/// Monte Carlo error estimate for the configured decoder, Wilson 95% CI.
/// Per-trial random streams derive from (master_seed, trial index), so the
/// result does not depend on the thread count.
ErrorEstimate monte_carlo_error(const TrialConfig& cfg);

std::string decoder_name(DecoderKind kind);
std::optional<DecoderKind> decoder_from_name(const std::string& name);

}  // namespace pmac
