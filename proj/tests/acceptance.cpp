// Acceptance suite: one line of output per criterion, nonzero exit on any
// failure. Heavier Monte Carlo checks live here rather than the unit tests.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>
#include <vector>

#include "pmac/analysis.hpp"
#include "pmac/brute_force.hpp"
#include "pmac/hypergraph.hpp"
#include "pmac/random_coding.hpp"
#include "pmac/report.hpp"
#include "pmac/rng.hpp"
#include "pmac/source_coding.hpp"

using namespace pmac;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail = "") {
    std::printf("criterion %2d %-28s %s%s%s\n", idx, name, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++g_failures;
}

int worker_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 2 : static_cast<int>(hw);
}

// --- criterion 1: rate maxima -------------------------------------------

void criterion_rate_maxima() {
    const RateMaximum mc = maximize_rate(&c_rate);
    const RateMaximum mg = maximize_rate(&c_group);
    const bool ok = std::fabs(mc.value - 0.5896) <= 1e-3 && std::fabs(mg.value - 0.5) <= 1e-3;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "max C=%.5f at p=%.4f, max C_g=%.5f at p=%.4f", mc.value,
                  mc.p_star, mg.value, mg.p_star);
    report(1, "rate maxima", ok, buf);
}

// --- criterion 2: dominance on a dense grid ------------------------------

void criterion_dominance() {
    bool ok = true;
    for (int i = 1; i <= 999; ++i) {
        const double p = i / 1000.0;
        if (!(c_rate(p) > c_group(p))) ok = false;
    }
    report(2, "C > C_g on (0,1)", ok);
}

// --- criterion 3: Fibonacci triple agreement ------------------------------

void criterion_fibonacci() {
    bool ok = true;
    for (int pi = 1; pi <= 9; ++pi) {
        const double p = pi / 10.0;
        for (int k = 1; k <= 60; ++k) {
            const double a = fib_extended(k, p);
            if (std::fabs(a - fib_closed(k, p)) > 1e-10) ok = false;
            if (k <= 25 && std::fabs(a - fib_comb_sum(k, p)) > 1e-10) ok = false;
        }
    }
    for (double p : {0.25, 0.5, 0.75}) {
        for (int m = 1; m <= 16; ++m) {
            double total = 0.0;
            for (long mask = 0; mask < (1L << m); ++mask) {
                bool valid = true;
                for (int i = 0; i + 1 < m; ++i)
                    if (!((mask >> i) & 1) && !((mask >> (i + 1)) & 1)) valid = false;
                if (!valid) continue;
                double prob = 1.0;
                for (int i = 0; i < m; ++i) prob *= ((mask >> i) & 1) ? p : (1.0 - p);
                total += prob;
            }
            if (std::fabs(no_consec_zeros_prob(m, p) - total) > 1e-12) ok = false;
        }
    }
    report(3, "Fibonacci agreement", ok);
}

// --- criterion 4: survival-probability Monte Carlo oracle -----------------

// One slot of the reduction applied to an odd cycle: with feedback y=0 the
// cycle survives iff no cycle vertex wrote; with y=1 it survives iff no two
// cyclically adjacent vertices are both silent.
bool cycle_survives(const std::vector<int>& bits, int y) {
    const int m = static_cast<int>(bits.size());
    if (y == 0) {
        for (int b : bits)
            if (b) return false;
        return true;
    }
    for (int i = 0; i < m; ++i)
        if (!bits[static_cast<size_t>(i)] && !bits[static_cast<size_t>((i + 1) % m)]) return false;
    return true;
}

void criterion_survival_oracle() {
    const long samples = 1000000;
    bool ok = true;
    auto rng = trial_stream(404, 0);
    for (double p : {0.35, 0.65}) {
        for (int m : {3, 5, 7}) {
            for (int u = 0; u <= 1; ++u) {
                for (int v = 0; v <= 1; ++v) {
                    const int y = u | v;
                    for (CycleType type : {CycleType::type1, CycleType::type2a,
                                           CycleType::type2b, CycleType::type3}) {
                        // fixed cycle bits contributed by the active users
                        std::vector<int> fixed;
                        if (type == CycleType::type1) fixed = {u, v};
                        else if (type == CycleType::type2a) fixed = {u};
                        else if (type == CycleType::type2b) fixed = {v};
                        long survived = 0;
                        std::vector<int> bits(static_cast<size_t>(m));
                        for (long i = 0; i < samples; ++i) {
                            for (size_t j = 0; j < fixed.size(); ++j)
                                bits[j] = fixed[j];
                            for (size_t j = fixed.size(); j < bits.size(); ++j)
                                bits[j] = bernoulli(rng, p) ? 1 : 0;
                            if (cycle_survives(bits, y)) ++survived;
                        }
                        const double mc = static_cast<double>(survived) / samples;
                        const double mu = survival_prob({type, u, v, m, p});
                        const double sigma =
                            std::sqrt(std::max(mu * (1.0 - mu), 1e-12) / samples);
                        if (std::fabs(mc - mu) > 3.0 * sigma + 1e-9) {
                            ok = false;
                            std::printf("  mismatch: type=%d (u,v)=(%d,%d) M=%d p=%.2f "
                                        "formula=%.6f mc=%.6f\n",
                                        static_cast<int>(type), u, v, m, p, mu, mc);
                        }
                    }
                }
            }
        }
    }
    report(4, "survival probabilities", ok);
}

// --- criterion 5: reduce == candidate_set ---------------------------------

void criterion_hypergraph_semantics() {
    auto rng = trial_stream(505, 0);
    int mismatches = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 4 + static_cast<int>(uniform_below(rng, 9));  // 4..12
        const int k = 2 + static_cast<int>(uniform_below(rng, 2));  // 2..3
        const int t = static_cast<int>(uniform_below(rng, 9));      // 0..8
        const double p = 0.2 + 0.3 * static_cast<double>(uniform_below(rng, 3));
        const AccessMatrix x = bernoulli_matrix(n, t, p, rng);
        const auto all = enumerate_status_vectors(n, k);
        const StatusVector& s = all[uniform_below(rng, all.size())];
        const Feedback y = or_channel(x, s);
        std::set<Edge> oracle;
        for (const StatusVector& c : candidate_set(n, k, x, y)) oracle.insert(c.active);
        if (reduce(n, k, x, y).edges() != oracle) ++mismatches;
    }
    report(5, "reduce == candidate_set", mismatches == 0,
           mismatches ? std::to_string(mismatches) + " mismatches" : "1000 instances");
}

// --- criterion 6: end-to-end demo -----------------------------------------

void criterion_demo() {
    const std::string trace = demo_trace();
    const bool ok = trace.find("[1,0,1]") != std::string::npos &&
                    trace.find("residual edges: (1,2) (1,4)") != std::string::npos &&
                    trace.find("separated: yes") != std::string::npos;
    report(6, "worked example demo", ok);
}

// --- criterion 7: source-coding / brute-force bound ------------------------

void criterion_error_bounds() {
    bool ok = true;
    const std::int64_t trials = 10000;
    const int threads = worker_threads();
    const std::pair<int, int> cases[] = {{6, 3}, {8, 2}, {10, 2}};
    for (const auto& [n, k] : cases) {
        const double w = partition_information_bits(n, k);
        for (int j = 0; j <= 4; ++j) {
            const int l = std::max(1, static_cast<int>(std::lround(std::exp2(w + j))));
            const double bound = theorem1_bound(l, w);
            const double sigma = std::sqrt(std::max(bound * (1.0 - bound), 1e-12) / trials);

            SourceErrorConfig sc;
            sc.n_users = n;
            sc.n_active = k;
            sc.codebook_size = l;
            sc.trials = trials;
            sc.master_seed = 700 + static_cast<std::uint64_t>(j);
            sc.threads = threads;
            const double src = empirical_source_error(sc).point;

            TrialConfig bc;
            bc.n_users = n;
            bc.n_active = k;
            bc.decoder = DecoderKind::brute_force;
            bc.codebook_size = l;
            bc.trials = trials;
            bc.master_seed = 800 + static_cast<std::uint64_t>(j);
            bc.threads = threads;
            bc.randomize_status = true;
            const double bf = monte_carlo_error(bc).point;

            if (src > bound + 3.0 * sigma || bf > bound + 3.0 * sigma) {
                ok = false;
                std::printf("  violation: N=%d K=%d L=%d bound=%.4g src=%.4g bf=%.4g\n", n, k,
                            l, bound, src, bf);
            }
        }
    }
    report(7, "error-probability bound", ok);
}

// --- criterion 8: error decays with N at fixed rate back-off ---------------

void criterion_error_trend() {
    const int threads = worker_threads();
    std::vector<ErrorEstimate> cells;
    std::string detail;
    for (int n : {64, 256, 1024}) {
        TrialConfig cfg;
        cfg.n_users = n;
        cfg.n_active = 2;
        cfg.bernoulli_p = 0.3;
        cfg.n_slots = slots_for_rate(n, 0.3, 0.09);
        cfg.trials = 10000;
        cfg.master_seed = 808;
        cfg.decoder = DecoderKind::bipartite_k2;
        cfg.threads = threads;
        cells.push_back(monte_carlo_error(cfg));
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%sN=%d:%.4f", detail.empty() ? "" : " ", n,
                      cells.back().point);
        detail += buf;
    }
    bool ok = true;
    for (size_t i = 1; i < cells.size(); ++i)
        if (cells[i].ci_low > cells[i - 1].ci_high) ok = false;
    report(8, "error decay in N", ok, detail);
}

// --- criterion 9: MAP dominance and oracle agreement -----------------------

void criterion_map_dominance() {
    auto rng = trial_stream(909, 0);
    int map_errors = 0, bip_errors = 0;
    bool oracle_ok = true;
    for (int rep = 0; rep < 500; ++rep) {
        const int n = 4 + static_cast<int>(uniform_below(rng, 7));  // 4..10
        const int t = 2 + static_cast<int>(uniform_below(rng, 5));  // 2..6
        const double p = 0.3 + 0.1 * static_cast<double>(uniform_below(rng, 5));
        const AccessMatrix x = bernoulli_matrix(n, t, p, rng);
        const StatusVector s(n, {1, 2});
        const Feedback y = or_channel(x, s);

        const PartitionVector zm = map_decode(n, 2, x, y);
        if (distortion(s, zm) != 0) ++map_errors;

        const auto zb = bipartite_decode_k2(n, x, y);
        if (!zb || distortion(s, *zb) != 0) ++bip_errors;

        int score = 0;
        for (const StatusVector& c : candidate_set(n, 2, x, y))
            if (distortion(c, zm) == 0) ++score;
        const Hypergraph h = reduce(n, 2, x, y);
        const auto [h_star, zc] = min_deletion_colorable(h, 2);
        if (score != static_cast<int>(h_star.n_edges())) oracle_ok = false;
    }
    const bool ok = map_errors <= bip_errors && oracle_ok;
    report(9, "MAP dominance", ok,
           "map errors " + std::to_string(map_errors) + " <= bipartite errors " +
               std::to_string(bip_errors) + (oracle_ok ? "" : "; oracle mismatch"));
}

// --- criterion 10: byte-identical reports ----------------------------------

void criterion_determinism() {
    bool ok = true;
    {
        SimulateConfig cfg;
        cfg.scheme = "bipartite-k2";
        cfg.n_list = {32, 64};
        cfg.trials = 3000;
        cfg.seed = 4242;
        cfg.threads = 1;
        const std::string a = strip_timing(simulate_report(cfg)).dump();
        const std::string b = strip_timing(simulate_report(cfg)).dump();
        cfg.threads = 4;
        const std::string c = strip_timing(simulate_report(cfg)).dump();
        if (a != b || a != c) ok = false;
    }
    {
        SimulateConfig cfg;
        cfg.scheme = "brute-force";
        cfg.n_list = {6};
        cfg.k = 3;
        cfg.codebook_size = 8;
        cfg.trials = 2000;
        cfg.seed = 4243;
        cfg.threads = 1;
        const std::string a = strip_timing(simulate_report(cfg)).dump();
        cfg.threads = 3;
        const std::string b = strip_timing(simulate_report(cfg)).dump();
        if (a != b) ok = false;
    }
    {
        SimulateConfig cfg;
        cfg.scheme = "map";
        cfg.n_list = {6};
        cfg.trials = 200;
        cfg.seed = 4244;
        cfg.threads = 1;
        const std::string a = strip_timing(simulate_report(cfg)).dump();
        cfg.threads = 2;
        const std::string b = strip_timing(simulate_report(cfg)).dump();
        if (a != b) ok = false;
    }
    report(10, "report determinism", ok);
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion_rate_maxima();
    criterion_dominance();
    criterion_fibonacci();
    criterion_survival_oracle();
    criterion_hypergraph_semantics();
    criterion_demo();
    criterion_error_bounds();
    criterion_error_trend();
    criterion_map_dominance();
    criterion_determinism();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d/10 criteria passed (%.1f s)\n", 10 - g_failures, secs);
    return g_failures == 0 ? 0 : 1;
}
