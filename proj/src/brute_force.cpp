#include "pmac/brute_force.hpp"

namespace pmac {

BruteForceCode build_matrix(const SourceCodebook& cb) {
    const int n = cb.n_users;
    const int k = cb.n_groups;
    const int l = static_cast<int>(cb.entries.size());
    if (l < 1) throw std::invalid_argument("build_matrix: empty codebook");
    AccessMatrix x(n, k * l);
    for (int ell = 0; ell < l; ++ell) {
        const PartitionVector& z = cb.entries[static_cast<size_t>(ell)];
        for (int i = 1; i <= n; ++i) x.set(i, ell * k + z.label(i), 1);
    }
    return BruteForceCode{cb, std::move(x)};
}

std::optional<PartitionVector> decode(const BruteForceCode& code, const Feedback& y) {
    const int k = code.codebook.n_groups;
    const int l = static_cast<int>(code.codebook.entries.size());
    if (y.n_slots() != k * l)
        throw std::invalid_argument("decode: feedback length must be K*L");
    for (int ell = 0; ell < l; ++ell) {
        bool all_ones = true;
        for (int j = 1; j <= k; ++j) {
            if (!y.at(ell * k + j)) {
                all_ones = false;
                break;
            }
        }
        if (all_ones) return code.codebook.entries[static_cast<size_t>(ell)];
    }
    return std::nullopt;
}

TrialOutcome run_trial(const BruteForceCode& code, const StatusVector& s) {
    const Feedback y = or_channel(code.matrix, s);
    return decode(code, y) ? TrialOutcome::correct : TrialOutcome::incorrect;
}

}  // namespace pmac
