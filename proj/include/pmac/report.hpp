#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace pmac {

/// "start:stop:step" (inclusive endpoints, within (0,1)) or a single value;
/// the empty string yields an empty grid.
std::vector<double> parse_grid(const std::string& text);

/// Comma-separated positive integers, e.g. "64,256,1024".
std::vector<int> parse_int_list(const std::string& text);

/// p, C(p), C_g(p) rows plus max / argmax trailer rows. RFC 4180 (CRLF).
std::string rates_csv(const std::vector<double>& grid);

/// Per (p, k): F(k,p), J_k(p), phi, psi and the recurrence-vs-closed-form
/// absolute difference.
std::string fib_csv(int k_max, const std::vector<double>& grid);

struct SimulateConfig {
    std::string scheme = "bipartite-k2";
    std::vector<int> n_list;
    int k = 2;
    double p = 0.3;
    double xi = 0.09;
    int codebook_size = 64;  // brute-force only
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    int threads = 1;
};

/// One JSON report with a cell per N. Byte-identical across runs with the
/// same config and seed except for the wall_clock_seconds fields.
nlohmann::json simulate_report(const SimulateConfig& cfg);

struct SourceReportConfig {
    int n = 0;
    int k = 0;
    int l = 1;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    int threads = 1;
};

nlohmann::json source_report(const SourceReportConfig& cfg);

/// Text replay of the worked 4-user example: matrix, feedback, per-slot edge
/// deletions, residual edges, output partition.
std::string demo_trace();

/// Strips volatile fields (wall clock) for reproducibility comparisons.
nlohmann::json strip_timing(nlohmann::json report);

}  // namespace pmac
