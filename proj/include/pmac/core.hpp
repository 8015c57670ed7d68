#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "pmac/types.hpp"

namespace pmac {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);
/// n! / (parts[0]! * ... * parts[m-1]!), requires sum(parts) == n.
BigInt multinomial(int n, const std::vector<int>& parts);
/// log2 of a positive exact integer, accurate also when it overflows double.
double log2_exact(const BigInt& v);

/// Noiseless Boolean OR channel: y_t = OR over active users i of x_{i,t}.
Feedback or_channel(const AccessMatrix& x, const StatusVector& s);

/// 0 iff all active users receive pairwise distinct labels.
int distortion(const StatusVector& s, const PartitionVector& z);

/// |S_{K;N}(z)| = product of the group sizes of z.
BigInt compatible_status_count(const PartitionVector& z);

/// |Z_{K;N}(n_1..n_K) intersect Z_{K;N}(s)| for any fixed s:
/// K! * multinomial(N-K; n_1-1, ..., n_K-1).
BigInt compatible_partition_count(int n, int k, const GroupSizes& sizes);

/// All status vectors in S_{K;N}, in lexicographic order of the active set.
std::vector<StatusVector> enumerate_status_vectors(int n, int k);

}  // namespace pmac
