#include "pmac/source_coding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "pmac/rng.hpp"

namespace pmac {

GroupSizes optimal_group_sizes(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("optimal_group_sizes: need 1 <= K <= N");
    std::vector<int> sizes(static_cast<size_t>(k), n / k);
    for (int i = 0; i < n % k; ++i) ++sizes[static_cast<size_t>(i)];  // larger groups first
    return GroupSizes(std::move(sizes));
}

double partition_information_bits(int n, int k) {
    const GroupSizes sizes = optimal_group_sizes(n, k);
    double w = log2_exact(binomial(n, k));
    for (int sz : sizes.sizes) w -= std::log2(static_cast<double>(sz));
    return w;
}

PartitionVector sample_uniform_partition(const GroupSizes& sizes, std::mt19937_64& rng) {
    const int n = sizes.total();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    // Fisher-Yates with the pinned uniform_below draw, so streams are stable
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<size_t>(i)],
                  perm[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    std::vector<int> labels(static_cast<size_t>(n), 0);
    int pos = 0;
    for (int g = 0; g < sizes.n_groups(); ++g)
        for (int j = 0; j < sizes.sizes[static_cast<size_t>(g)]; ++j)
            labels[static_cast<size_t>(perm[static_cast<size_t>(pos++)]) - 1] = g + 1;
    return PartitionVector(sizes.n_groups(), std::move(labels));
}

SourceCodebook generate_codebook(int n, int k, int l, std::mt19937_64& rng) {
    if (l < 1) throw std::invalid_argument("generate_codebook: L must be >= 1");
    const GroupSizes sizes = optimal_group_sizes(n, k);
    SourceCodebook cb;
    cb.n_users = n;
    cb.n_groups = k;
    cb.entries.reserve(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) cb.entries.push_back(sample_uniform_partition(sizes, rng));
    return cb;
}

std::optional<int> source_encode(const SourceCodebook& cb, const StatusVector& s) {
    if (cb.n_users != s.n_users)
        throw std::invalid_argument("source_encode: dimension mismatch");
    for (size_t i = 0; i < cb.entries.size(); ++i)
        if (distortion(s, cb.entries[i]) == 0) return static_cast<int>(i) + 1;
    return std::nullopt;
}

double theorem1_bound(int l, double w_bits) {
    if (l < 1) throw std::invalid_argument("theorem1_bound: L must be >= 1");
    return std::exp(-std::exp2(std::log2(static_cast<double>(l)) - w_bits));
}

ErrorEstimate empirical_source_error(const SourceErrorConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("empirical_source_error: trials must be >= 1");
    const int n = cfg.n_users;
    const int k = cfg.n_active;
    const GroupSizes sizes = optimal_group_sizes(n, k);
    const BigInt n_status = binomial(n, k);
    const auto status_count = n_status.convert_to<std::uint64_t>();

    SourceCodebook shared;
    if (cfg.fixed_codebook) {
        auto rng = trial_stream(cfg.master_seed, 0);
        shared = generate_codebook(n, k, cfg.codebook_size, rng);
    }

    const auto all_status = enumerate_status_vectors(n, k);

    const int n_threads = std::max(1, cfg.threads);
    std::vector<std::int64_t> fail_per_thread(static_cast<size_t>(n_threads), 0);
    auto worker = [&](int tid) {
        std::int64_t fails = 0;
        for (std::int64_t trial = tid; trial < cfg.trials; trial += n_threads) {
            auto rng = trial_stream(cfg.master_seed, static_cast<std::uint64_t>(trial) + 1);
            const StatusVector& s = all_status[uniform_below(rng, status_count)];
            if (cfg.fixed_codebook) {
                if (!source_encode(shared, s)) ++fails;
            } else {
                const SourceCodebook cb = generate_codebook(n, k, cfg.codebook_size, rng);
                if (!source_encode(cb, s)) ++fails;
            }
        }
        fail_per_thread[static_cast<size_t>(tid)] = fails;
    };
    if (n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    const std::int64_t failures =
        std::accumulate(fail_per_thread.begin(), fail_per_thread.end(), std::int64_t{0});

    ErrorEstimate est;
    est.trials = cfg.trials;
    est.failures = failures;
    est.point = static_cast<double>(failures) / static_cast<double>(cfg.trials);
    const Interval ci = wilson_interval(failures, cfg.trials);
    est.ci_low = ci.low;
    est.ci_high = ci.high;
    return est;
}

}  // namespace pmac
