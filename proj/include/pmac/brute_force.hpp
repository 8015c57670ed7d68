#pragma once

#include <optional>

#include "pmac/source_coding.hpp"

namespace pmac {

/// Accessing matrix built from a source codebook: L blocks of K slots, row i
/// of block ell is the unit indicator of user i's group under z_ell.
struct BruteForceCode {
    SourceCodebook codebook;
    AccessMatrix matrix;  // T = K * L
};

BruteForceCode build_matrix(const SourceCodebook& cb);

/// Split y into L blocks of K slots; return z_ell for the first all-ones
/// block, or nullopt (decoding failure) when none validates.
std::optional<PartitionVector> decode(const BruteForceCode& code, const Feedback& y);

enum class TrialOutcome { correct, incorrect };

/// Full pipeline for one status vector: channel then block decode.
/// A successful decode is always distortion-free, so correctness reduces to
/// decode success.
TrialOutcome run_trial(const BruteForceCode& code, const StatusVector& s);

}  // namespace pmac
