#include "pmac/random_coding.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

#include "pmac/analysis.hpp"
#include "pmac/brute_force.hpp"
#include "pmac/hypergraph.hpp"
#include "pmac/rng.hpp"

namespace pmac {

namespace {

constexpr double kMaxMapLabelings = 1 << 24;

// Word-packed rows for the K=2 fast path.
struct PackedMatrix {
    int n = 0;
    int t = 0;
    int words = 0;
    std::vector<std::uint64_t> rows;  // rows[(i-1)*words + w]

    const std::uint64_t* row(int i) const { return &rows[static_cast<size_t>(i - 1) * words]; }
};

PackedMatrix pack(const AccessMatrix& x) {
    PackedMatrix m;
    m.n = x.n_users;
    m.t = x.n_slots;
    m.words = (x.n_slots + 63) / 64;
    m.rows.assign(static_cast<size_t>(m.n) * m.words, 0);
    for (int i = 1; i <= m.n; ++i)
        for (int t = 1; t <= m.t; ++t)
            if (x.at(i, t))
                m.rows[static_cast<size_t>(i - 1) * m.words + (t - 1) / 64] |=
                    1ULL << ((t - 1) % 64);
    return m;
}

PackedMatrix draw_packed(int n, int t, double p, std::mt19937_64& rng) {
    PackedMatrix m;
    m.n = n;
    m.t = t;
    m.words = (t + 63) / 64;
    m.rows.assign(static_cast<size_t>(n) * m.words, 0);
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < t; ++s)
            if (bernoulli(rng, p))
                m.rows[static_cast<size_t>(i) * m.words + s / 64] |= 1ULL << (s % 64);
    return m;
}

// Two-colors the reduced graph implied by (X, y) without materializing it.
// A vertex that wrote in a y=0 slot is deleted; among survivors, (i,j) is an
// edge iff no y=1 slot has both silent. Returns per-vertex colors (1/2,
// 0 for deleted or untouched vertices) or nullopt on a non-bipartite
// component.
std::optional<std::vector<int>> reduced_two_color(const PackedMatrix& m,
                                                  const std::vector<std::uint64_t>& y_words) {
    const int w = m.words;
    std::vector<std::uint64_t> y0(static_cast<size_t>(w));
    for (int i = 0; i < w; ++i) y0[static_cast<size_t>(i)] = ~y_words[static_cast<size_t>(i)];
    if (m.t % 64) y0[static_cast<size_t>(w) - 1] &= (1ULL << (m.t % 64)) - 1;

    std::vector<int> alive;
    std::vector<std::uint64_t> silent;  // zero positions within y=1 slots, per alive vertex
    for (int i = 1; i <= m.n; ++i) {
        const std::uint64_t* row = m.row(i);
        bool ok = true;
        for (int j = 0; j < w; ++j)
            if (row[j] & y0[static_cast<size_t>(j)]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        alive.push_back(i);
        for (int j = 0; j < w; ++j) silent.push_back(~row[j] & y_words[static_cast<size_t>(j)]);
    }

    const int na = static_cast<int>(alive.size());
    auto adjacent = [&](int ia, int ib) {
        for (int j = 0; j < w; ++j)
            if (silent[static_cast<size_t>(ia) * w + j] & silent[static_cast<size_t>(ib) * w + j])
                return false;  // a y=1 slot with both silent: edge was deleted
        return true;
    };

    std::vector<int> local(static_cast<size_t>(na), 0);
    std::vector<int> stack;
    for (int s = 0; s < na; ++s) {
        if (local[static_cast<size_t>(s)] != 0) continue;
        local[static_cast<size_t>(s)] = 1;
        stack.assign(1, s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < na; ++u) {
                if (u == v || !adjacent(v, u)) continue;
                if (local[static_cast<size_t>(u)] == 0) {
                    local[static_cast<size_t>(u)] = 3 - local[static_cast<size_t>(v)];
                    stack.push_back(u);
                } else if (local[static_cast<size_t>(u)] == local[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<int> color(static_cast<size_t>(m.n), 0);
    for (int i = 0; i < na; ++i)
        color[static_cast<size_t>(alive[static_cast<size_t>(i)]) - 1] = local[static_cast<size_t>(i)];
    return color;
}

std::vector<std::uint64_t> or_rows(const PackedMatrix& m, int a, int b) {
    std::vector<std::uint64_t> y(static_cast<size_t>(m.words));
    const std::uint64_t* ra = m.row(a);
    const std::uint64_t* rb = m.row(b);
    for (int j = 0; j < m.words; ++j) y[static_cast<size_t>(j)] = ra[j] | rb[j];
    return y;
}

std::int64_t run_threaded(std::int64_t trials, int threads,
                          const std::function<bool(std::int64_t)>& trial_fails) {
    const int n_threads = std::max(1, threads);
    std::vector<std::int64_t> fails(static_cast<size_t>(n_threads), 0);
    auto worker = [&](int tid) {
        std::int64_t f = 0;
        for (std::int64_t i = tid; i < trials; i += n_threads)
            if (trial_fails(i)) ++f;
        fails[static_cast<size_t>(tid)] = f;
    };
    if (n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    return std::accumulate(fails.begin(), fails.end(), std::int64_t{0});
}

}  // namespace

AccessMatrix bernoulli_matrix(int n, int t, double p, std::mt19937_64& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("bernoulli_matrix: p must be in [0,1]");
    AccessMatrix x(n, t);
    for (int i = 1; i <= n; ++i)
        for (int s = 1; s <= t; ++s)
            if (bernoulli(rng, p)) x.set(i, s, 1);
    return x;
}

PartitionVector map_decode(int n, int k, const AccessMatrix& x, const Feedback& y) {
    if (n * std::log2(static_cast<double>(k)) > std::log2(kMaxMapLabelings))
        throw std::invalid_argument("map_decode: instance too large for exhaustive search");
    const auto candidates = candidate_set(n, k, x, y);

    std::vector<int> labels(static_cast<size_t>(n), 1);
    std::vector<int> best_labels;
    int best_score = -1;
    // odometer over all label vectors, lexicographic, so ties resolve to the
    // lexicographically least maximizer
    while (true) {
        std::vector<char> used(static_cast<size_t>(k), 0);
        for (int v : labels) used[static_cast<size_t>(v) - 1] = 1;
        if (std::all_of(used.begin(), used.end(), [](char c) { return c != 0; })) {
            const PartitionVector z(k, labels);
            int score = 0;
            for (const StatusVector& s : candidates)
                if (distortion(s, z) == 0) ++score;
            if (score > best_score) {
                best_score = score;
                best_labels = labels;
            }
        }
        int i = n - 1;
        while (i >= 0 && labels[static_cast<size_t>(i)] == k) {
            labels[static_cast<size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++labels[static_cast<size_t>(i)];
    }
    return PartitionVector(k, std::move(best_labels));
}

std::optional<PartitionVector> bipartite_decode_k2(int n, const AccessMatrix& x, const Feedback& y) {
    if (x.n_users != n) throw std::invalid_argument("bipartite_decode_k2: dimension mismatch");
    if (y.n_slots() != x.n_slots)
        throw std::invalid_argument("bipartite_decode_k2: feedback length mismatch");
    const PackedMatrix m = pack(x);
    std::vector<std::uint64_t> yw(static_cast<size_t>(m.words), 0);
    for (int t = 1; t <= m.t; ++t)
        if (y.at(t)) yw[static_cast<size_t>(t - 1) / 64] |= 1ULL << ((t - 1) % 64);
    auto colors = reduced_two_color(m, yw);
    if (!colors) return std::nullopt;
    return complete_coloring(std::move(*colors), 2);
}

int slots_for_rate(int n, double p, double xi) {
    if (n < 2) throw std::invalid_argument("slots_for_rate: need N >= 2");
    const double margin = c_rate(p) - xi;
    if (margin <= 0.0) throw std::invalid_argument("slots_for_rate: rate margin must be positive");
    return static_cast<int>(std::ceil(std::log2(static_cast<double>(n)) / margin));
}

ErrorEstimate monte_carlo_error(const TrialConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("monte_carlo_error: trials must be >= 1");
    if (cfg.n_active < 1 || cfg.n_active > cfg.n_users)
        throw std::invalid_argument("monte_carlo_error: need 1 <= K <= N");
    if (cfg.decoder == DecoderKind::bipartite_k2 && cfg.n_active != 2)
        throw std::invalid_argument("monte_carlo_error: bipartite decoder needs K=2");
    if (cfg.decoder == DecoderKind::brute_force && cfg.codebook_size < 1)
        throw std::invalid_argument("monte_carlo_error: brute-force needs a codebook size");
    if (cfg.decoder != DecoderKind::brute_force &&
        (cfg.bernoulli_p < 0.0 || cfg.bernoulli_p > 1.0 || cfg.n_slots < 1))
        throw std::invalid_argument("monte_carlo_error: invalid p or T");

    const int n = cfg.n_users;
    const int k = cfg.n_active;

    auto pick_status = [&](std::mt19937_64& rng) -> StatusVector {
        if (!cfg.randomize_status) {
            std::vector<int> ids(static_cast<size_t>(k));
            std::iota(ids.begin(), ids.end(), 1);
            return StatusVector(n, std::move(ids));
        }
        // uniform K-subset via partial Fisher-Yates
        std::vector<int> pool(static_cast<size_t>(n));
        std::iota(pool.begin(), pool.end(), 1);
        for (int i = 0; i < k; ++i)
            std::swap(pool[static_cast<size_t>(i)],
                      pool[static_cast<size_t>(i) +
                           uniform_below(rng, static_cast<std::uint64_t>(n - i))]);
        return StatusVector(n, std::vector<int>(pool.begin(), pool.begin() + k));
    };

    // shared state for fixed-codebook modes, drawn from stream 0
    PackedMatrix shared_packed;
    AccessMatrix shared_matrix;
    BruteForceCode shared_code;
    if (cfg.fixed_codebook) {
        auto rng0 = trial_stream(cfg.master_seed, 0);
        if (cfg.decoder == DecoderKind::brute_force)
            shared_code = build_matrix(generate_codebook(n, k, cfg.codebook_size, rng0));
        else if (cfg.decoder == DecoderKind::bipartite_k2)
            shared_packed = draw_packed(n, cfg.n_slots, cfg.bernoulli_p, rng0);
        else
            shared_matrix = bernoulli_matrix(n, cfg.n_slots, cfg.bernoulli_p, rng0);
    }

    std::function<bool(std::int64_t)> trial_fails;
    switch (cfg.decoder) {
        case DecoderKind::bipartite_k2:
            trial_fails = [&](std::int64_t trial) {
                auto rng = trial_stream(cfg.master_seed, static_cast<std::uint64_t>(trial) + 1);
                const PackedMatrix m = cfg.fixed_codebook
                                           ? shared_packed
                                           : draw_packed(n, cfg.n_slots, cfg.bernoulli_p, rng);
                int a = 1, b = 2;
                if (cfg.randomize_status) {
                    const StatusVector s = pick_status(rng);
                    a = s.active[0];
                    b = s.active[1];
                }
                auto colors = reduced_two_color(m, or_rows(m, a, b));
                if (!colors) return true;
                // edge (a,b) survives in the noiseless channel, so a 2-coloring
                // always separates the true pair; keep the check anyway
                return (*colors)[static_cast<size_t>(a) - 1] ==
                       (*colors)[static_cast<size_t>(b) - 1];
            };
            break;
        case DecoderKind::map:
            trial_fails = [&](std::int64_t trial) {
                auto rng = trial_stream(cfg.master_seed, static_cast<std::uint64_t>(trial) + 1);
                const AccessMatrix x = cfg.fixed_codebook
                                           ? shared_matrix
                                           : bernoulli_matrix(n, cfg.n_slots, cfg.bernoulli_p, rng);
                const StatusVector s = pick_status(rng);
                const Feedback y = or_channel(x, s);
                const PartitionVector z = map_decode(n, k, x, y);
                return distortion(s, z) != 0;
            };
            break;
        case DecoderKind::brute_force:
            trial_fails = [&](std::int64_t trial) {
                auto rng = trial_stream(cfg.master_seed, static_cast<std::uint64_t>(trial) + 1);
                if (cfg.fixed_codebook) {
                    const StatusVector s = pick_status(rng);
                    return run_trial(shared_code, s) == TrialOutcome::incorrect;
                }
                const BruteForceCode code =
                    build_matrix(generate_codebook(n, k, cfg.codebook_size, rng));
                const StatusVector s = pick_status(rng);
                return run_trial(code, s) == TrialOutcome::incorrect;
            };
            break;
    }

    const std::int64_t failures = run_threaded(cfg.trials, cfg.threads, trial_fails);
    ErrorEstimate est;
    est.trials = cfg.trials;
    est.failures = failures;
    est.point = static_cast<double>(failures) / static_cast<double>(cfg.trials);
    const Interval ci = wilson_interval(failures, cfg.trials);
    est.ci_low = ci.low;
    est.ci_high = ci.high;
    return est;
}

std::string decoder_name(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::map: return "map";
        case DecoderKind::bipartite_k2: return "bipartite-k2";
        case DecoderKind::brute_force: return "brute-force";
    }
    return "unknown";
}

std::optional<DecoderKind> decoder_from_name(const std::string& name) {
    if (name == "map") return DecoderKind::map;
    if (name == "bipartite-k2") return DecoderKind::bipartite_k2;
    if (name == "brute-force") return DecoderKind::brute_force;
    return std::nullopt;
}

}  // namespace pmac
