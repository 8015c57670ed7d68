#include "pmac/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "pmac/analysis.hpp"
#include "pmac/brute_force.hpp"
#include "pmac/hypergraph.hpp"
#include "pmac/random_coding.hpp"
#include "pmac/source_coding.hpp"

namespace pmac {

namespace {

constexpr const char* kCrlf = "\r\n";

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// Theoretical reference for the hypergraph decoders: sum of the per-length
// 1-odd-cycle bounds 2^(-(M-2) C(p) T) over odd M up to N.
double cycle_bound_sum(int n, double p, int t) {
    double total = 0.0;
    for (int m = 3; m <= n; m += 2) total += cycle_error_bound(m, p, t);
    return total;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
    if (text.empty()) return {};
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad grid component: " + item);
        parts.push_back(v);
    }
    if (parts.size() == 1) {
        if (parts[0] <= 0.0 || parts[0] >= 1.0)
            throw std::invalid_argument("grid values must lie in (0,1)");
        return parts;
    }
    if (parts.size() != 3) throw std::invalid_argument("grid must be value or start:stop:step");
    const double start = parts[0], stop = parts[1], step = parts[2];
    if (step <= 0.0 || start > stop) throw std::invalid_argument("bad grid range");
    if (start <= 0.0 || stop >= 1.0)
        throw std::invalid_argument("grid values must lie in (0,1)");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double v = start + step * i;
        if (v > stop + step * 1e-9) break;
        grid.push_back(std::min(v, stop));
    }
    return grid;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size() || v < 1)
            throw std::invalid_argument("bad integer list component: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::string rates_csv(const std::vector<double>& grid) {
    std::string out = "p,c,c_g";
    out += kCrlf;
    for (double p : grid) {
        out += num(p) + "," + num(c_rate(p)) + "," + num(c_group(p));
        out += kCrlf;
    }
    const RateMaximum mc = maximize_rate(&c_rate);
    const RateMaximum mg = maximize_rate(&c_group);
    out += std::string("max,") + num(mc.value) + "," + num(mg.value);
    out += kCrlf;
    out += std::string("argmax,") + num(mc.p_star) + "," + num(mg.p_star);
    out += kCrlf;
    return out;
}

std::string fib_csv(int k_max, const std::vector<double>& grid) {
    if (k_max < 1) throw std::invalid_argument("fib_csv: k_max must be >= 1");
    std::string out = "p,k,f,j,phi,psi,agreement";
    out += kCrlf;
    for (double p : grid) {
        for (int k = 1; k <= k_max; ++k) {
            const double f = fib_extended(k, p);
            const double agree = std::fabs(f - fib_closed(k, p));
            out += num(p) + "," + std::to_string(k) + "," + num(f) + "," +
                   num(no_consec_zeros_prob(k, p)) + "," + num(phi(p)) + "," + num(psi(p)) +
                   "," + num(agree);
            out += kCrlf;
        }
    }
    return out;
}

nlohmann::json simulate_report(const SimulateConfig& cfg) {
    const auto decoder = decoder_from_name(cfg.scheme);
    if (!decoder) throw std::invalid_argument("unknown scheme: " + cfg.scheme);
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.n_list.empty()) throw std::invalid_argument("need at least one N");

    nlohmann::json report;
    report["command"] = "simulate";
    report["scheme"] = cfg.scheme;
    report["k"] = cfg.k;
    report["trials"] = cfg.trials;
    report["seed"] = cfg.seed;
    if (*decoder == DecoderKind::brute_force) {
        report["l"] = cfg.codebook_size;
    } else {
        report["p"] = cfg.p;
        report["xi"] = cfg.xi;
    }

    nlohmann::json cells = nlohmann::json::array();
    for (int n : cfg.n_list) {
        TrialConfig tc;
        tc.n_users = n;
        tc.n_active = cfg.k;
        tc.trials = cfg.trials;
        tc.master_seed = cfg.seed;
        tc.decoder = *decoder;
        tc.threads = cfg.threads;
        nlohmann::json cell;
        cell["n"] = n;
        if (*decoder == DecoderKind::brute_force) {
            tc.codebook_size = cfg.codebook_size;
            cell["t"] = cfg.k * cfg.codebook_size;
            cell["reference_bound"] =
                theorem1_bound(cfg.codebook_size, partition_information_bits(n, cfg.k));
        } else {
            tc.n_slots = slots_for_rate(n, cfg.p, cfg.xi);
            tc.bernoulli_p = cfg.p;
            cell["t"] = tc.n_slots;
            cell["reference_bound"] = cycle_bound_sum(n, cfg.p, tc.n_slots);
        }
        const double t0 = now_seconds();
        const ErrorEstimate est = monte_carlo_error(tc);
        cell["wall_clock_seconds"] = now_seconds() - t0;
        cell["error"] = est.point;
        cell["ci_low"] = est.ci_low;
        cell["ci_high"] = est.ci_high;
        cell["failures"] = est.failures;
        cell["trials"] = est.trials;
        cells.push_back(std::move(cell));
    }
    report["cells"] = std::move(cells);
    return report;
}

nlohmann::json source_report(const SourceReportConfig& cfg) {
    SourceErrorConfig sc;
    sc.n_users = cfg.n;
    sc.n_active = cfg.k;
    sc.codebook_size = cfg.l;
    sc.trials = cfg.trials;
    sc.master_seed = cfg.seed;
    sc.threads = cfg.threads;
    const double w = partition_information_bits(cfg.n, cfg.k);
    const double t0 = now_seconds();
    const ErrorEstimate est = empirical_source_error(sc);
    nlohmann::json report;
    report["command"] = "source";
    report["n"] = cfg.n;
    report["k"] = cfg.k;
    report["l"] = cfg.l;
    report["trials"] = est.trials;
    report["seed"] = cfg.seed;
    report["information_bits"] = w;
    report["reference_bound"] = theorem1_bound(cfg.l, w);
    report["error"] = est.point;
    report["ci_low"] = est.ci_low;
    report["ci_high"] = est.ci_high;
    report["failures"] = est.failures;
    report["wall_clock_seconds"] = now_seconds() - t0;
    return report;
}

std::string demo_trace() {
    const int n = 4, k = 2;
    AccessMatrix x(n, 3);
    const int bits[4][3] = {{1, 0, 1}, {1, 0, 0}, {0, 1, 1}, {0, 0, 0}};
    for (int i = 1; i <= n; ++i)
        for (int t = 1; t <= 3; ++t) x.set(i, t, bits[i - 1][t - 1]);
    StatusVector s(n, {1, 2});
    const Feedback y = or_channel(x, s);

    std::ostringstream out;
    out << "demo: N=4 users, K=2 active (users 1 and 2), T=3 slots\n\n";
    out << "accessing matrix X (rows = users, columns = slots):\n";
    for (int i = 1; i <= n; ++i) {
        out << "  user " << i << ": [";
        for (int t = 1; t <= 3; ++t) out << (t > 1 ? "," : "") << int(x.at(i, t));
        out << "]\n";
    }
    out << "\nfeedback y = [";
    for (int t = 1; t <= 3; ++t) out << (t > 1 ? "," : "") << int(y.at(t));
    out << "]\n\n";

    auto edge_list = [](const Hypergraph& h) {
        std::string txt;
        for (const Edge& e : h.edges()) {
            if (!txt.empty()) txt += " ";
            txt += "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + ")";
        }
        return txt.empty() ? std::string("none") : txt;
    };

    Hypergraph h = Hypergraph::complete(n, k);
    out << "candidate graph starts complete: " << edge_list(h) << "\n";
    for (int t = 1; t <= 3; ++t) {
        std::vector<int> writers;
        for (int i = 1; i <= n; ++i)
            if (x.at(i, t)) writers.push_back(i);
        const Hypergraph next = apply_slot(h, writers, y.at(t));
        out << "slot " << t << ": writers {";
        for (size_t j = 0; j < writers.size(); ++j) out << (j ? "," : "") << writers[j];
        out << "}, y=" << int(y.at(t)) << " -> "
            << (y.at(t) ? "drop edges avoiding the writers" : "drop edges touching the writers")
            << "; edges now: " << edge_list(next) << "\n";
        h = next;
    }
    out << "\nresidual edges: " << edge_list(h) << "\n";

    const auto z = strong_color(h, k);
    if (!z) {
        out << "no 2-coloring exists (unexpected for this instance)\n";
        return out.str();
    }
    out << "output partition z = [";
    for (int i = 1; i <= n; ++i) out << (i > 1 ? "," : "") << z->label(i);
    out << "]\n";
    out << "users 1 and 2 separated: " << (z->label(1) != z->label(2) ? "yes" : "no") << "\n";
    return out.str();
}

nlohmann::json strip_timing(nlohmann::json report) {
    report.erase("wall_clock_seconds");
    if (report.contains("cells"))
        for (auto& cell : report["cells"]) cell.erase("wall_clock_seconds");
    return report;
}

}  // namespace pmac
