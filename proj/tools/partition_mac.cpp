// partition-mac: rates / fib curve data (CSV), simulation reports (JSON),
// source-coding error estimates, and a worked end-to-end demo.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmac/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

int write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return kExitIo;
    }
    out << payload;
    if (!out) {
        std::cerr << "error: write failed: " << path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

nlohmann::json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    nlohmann::json cfg;
    in >> cfg;
    return cfg;
}

// fills `value` from the config file unless the flag was given explicitly
template <typename T>
void merge(const nlohmann::json& cfg, const CLI::Option* opt, const char* key, T& value,
           bool* present = nullptr) {
    if (opt->count() > 0) {
        if (present) *present = true;
        return;
    }
    if (cfg.contains(key)) {
        value = cfg.at(key).get<T>();
        if (present) *present = true;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition-reservation coding over the Boolean OR channel"};
    app.require_subcommand(1);

    // rates
    std::string rates_grid = "0.01:0.99:0.01";
    std::string rates_out;
    auto* rates = app.add_subcommand("rates", "C(p) and C_g(p) over a p grid (CSV)");
    rates->add_option("--grid", rates_grid, "p grid as start:stop:step or a single value");
    rates->add_option("--out", rates_out, "output file (default: stdout)");

    // fib
    int fib_kmax = 40;
    std::string fib_grid = "0.1:0.9:0.1";
    std::string fib_out;
    auto* fib = app.add_subcommand("fib", "extended Fibonacci table F(k,p), J_k(p) (CSV)");
    fib->add_option("--kmax", fib_kmax, "largest k")->check(CLI::PositiveNumber);
    fib->add_option("--grid", fib_grid, "p grid as start:stop:step or a single value");
    fib->add_option("--out", fib_out, "output file (default: stdout)");

    // simulate
    pmac::SimulateConfig sim;
    std::string sim_n = "64";
    std::string sim_out;
    std::string sim_config;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo decoder error rates (JSON)");
    auto* o_scheme = simulate->add_option("--scheme", sim.scheme, "brute-force | bipartite-k2 | map");
    auto* o_n = simulate->add_option("--n", sim_n, "comma-separated list of N values");
    auto* o_k = simulate->add_option("--k", sim.k, "number of active users");
    auto* o_p = simulate->add_option("--p", sim.p, "Bernoulli access probability");
    auto* o_xi = simulate->add_option("--xi", sim.xi, "rate back-off when choosing T");
    auto* o_l = simulate->add_option("--l", sim.codebook_size, "codebook size (brute-force)");
    auto* o_trials = simulate->add_option("--trials", sim.trials, "trials per cell");
    auto* o_seed = simulate->add_option("--seed", sim.seed, "master seed (required)");
    auto* o_threads = simulate->add_option("--threads", sim.threads, "worker threads");
    auto* o_out = simulate->add_option("--out", sim_out, "output file (default: stdout)");
    simulate->add_option("--config", sim_config, "JSON config file; flags override its values");

    // source
    pmac::SourceReportConfig src;
    std::string src_out;
    std::string src_config;
    auto* source = app.add_subcommand("source", "empirical source-coding error (JSON)");
    auto* s_n = source->add_option("--n", src.n, "number of users");
    auto* s_k = source->add_option("--k", src.k, "number of active users");
    auto* s_l = source->add_option("--l", src.l, "codebook size");
    auto* s_trials = source->add_option("--trials", src.trials, "number of trials");
    auto* s_seed = source->add_option("--seed", src.seed, "master seed (required)");
    auto* s_threads = source->add_option("--threads", src.threads, "worker threads");
    auto* s_out = source->add_option("--out", src_out, "output file (default: stdout)");
    source->add_option("--config", src_config, "JSON config file; flags override its values");

    // demo
    auto* demo = app.add_subcommand("demo", "replay the worked 4-user example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (rates->parsed())
            return write_output(rates_out, pmac::rates_csv(pmac::parse_grid(rates_grid)));
        if (fib->parsed())
            return write_output(fib_out, pmac::fib_csv(fib_kmax, pmac::parse_grid(fib_grid)));
        if (simulate->parsed()) {
            bool have_seed = false;
            nlohmann::json cfg;
            if (!sim_config.empty()) cfg = load_config(sim_config);
            merge(cfg, o_scheme, "scheme", sim.scheme);
            merge(cfg, o_n, "n", sim_n);
            merge(cfg, o_k, "k", sim.k);
            merge(cfg, o_p, "p", sim.p);
            merge(cfg, o_xi, "xi", sim.xi);
            merge(cfg, o_l, "l", sim.codebook_size);
            merge(cfg, o_trials, "trials", sim.trials);
            merge(cfg, o_seed, "seed", sim.seed, &have_seed);
            merge(cfg, o_threads, "threads", sim.threads);
            merge(cfg, o_out, "out", sim_out);
            if (!have_seed) throw std::invalid_argument("simulate requires --seed");
            sim.n_list = pmac::parse_int_list(sim_n);
            return write_output(sim_out, pmac::simulate_report(sim).dump(2) + "\n");
        }
        if (source->parsed()) {
            bool have_seed = false;
            nlohmann::json cfg;
            if (!src_config.empty()) cfg = load_config(src_config);
            merge(cfg, s_n, "n", src.n);
            merge(cfg, s_k, "k", src.k);
            merge(cfg, s_l, "l", src.l);
            merge(cfg, s_trials, "trials", src.trials);
            merge(cfg, s_seed, "seed", src.seed, &have_seed);
            merge(cfg, s_threads, "threads", src.threads);
            merge(cfg, s_out, "out", src_out);
            if (!have_seed) throw std::invalid_argument("source requires --seed");
            if (src.n < 1 || src.k < 1) throw std::invalid_argument("source requires --n and --k");
            return write_output(src_out, pmac::source_report(src).dump(2) + "\n");
        }
        if (demo->parsed()) {
            std::cout << pmac::demo_trace();
            return kExitOk;
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitConfig;
}
