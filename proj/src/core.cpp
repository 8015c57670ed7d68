#include "pmac/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace pmac {

StatusVector::StatusVector(int n, std::vector<int> active_ids)
    : n_users(n), active(std::move(active_ids)) {
    if (n_users < 1) throw std::invalid_argument("StatusVector: n_users must be positive");
    if (active.empty()) throw std::invalid_argument("StatusVector: needs at least one active user");
    std::sort(active.begin(), active.end());
    for (size_t i = 0; i < active.size(); ++i) {
        if (active[i] < 1 || active[i] > n_users)
            throw std::invalid_argument("StatusVector: user id out of range");
        if (i > 0 && active[i] == active[i - 1])
            throw std::invalid_argument("StatusVector: duplicate active user");
    }
}

bool StatusVector::is_active(int user) const {
    return std::binary_search(active.begin(), active.end(), user);
}

PartitionVector::PartitionVector(int k, std::vector<int> lab)
    : n_groups(k), labels(std::move(lab)) {
    if (n_groups < 1) throw std::invalid_argument("PartitionVector: n_groups must be positive");
    std::vector<char> seen(static_cast<size_t>(n_groups), 0);
    for (int v : labels) {
        if (v < 1 || v > n_groups)
            throw std::invalid_argument("PartitionVector: label out of range");
        seen[static_cast<size_t>(v) - 1] = 1;
    }
    for (char c : seen)
        if (!c) throw std::invalid_argument("PartitionVector: some group is empty");
}

std::vector<int> PartitionVector::group_sizes() const {
    std::vector<int> sizes(static_cast<size_t>(n_groups), 0);
    for (int v : labels) ++sizes[static_cast<size_t>(v) - 1];
    return sizes;
}

GroupSizes::GroupSizes(std::vector<int> s) : sizes(std::move(s)) {
    if (sizes.empty()) throw std::invalid_argument("GroupSizes: empty");
    for (int v : sizes)
        if (v < 1) throw std::invalid_argument("GroupSizes: each group size must be >= 1");
}

int GroupSizes::total() const {
    return std::accumulate(sizes.begin(), sizes.end(), 0);
}

AccessMatrix::AccessMatrix(int n, int t)
    : n_users(n), n_slots(t), bits(static_cast<size_t>(n) * t, 0) {
    if (n < 1 || t < 0) throw std::invalid_argument("AccessMatrix: bad dimensions");
}

AccessMatrix::AccessMatrix(int n, int t, std::vector<std::uint8_t> b)
    : n_users(n), n_slots(t), bits(std::move(b)) {
    if (n < 1 || t < 0) throw std::invalid_argument("AccessMatrix: bad dimensions");
    if (bits.size() != static_cast<size_t>(n) * t)
        throw std::invalid_argument("AccessMatrix: bit count does not match dimensions");
    for (auto v : bits)
        if (v > 1) throw std::invalid_argument("AccessMatrix: entries must be 0/1");
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt multinomial(int n, const std::vector<int>& parts) {
    int sum = std::accumulate(parts.begin(), parts.end(), 0);
    if (sum != n) throw std::invalid_argument("multinomial: parts must sum to n");
    BigInt r = 1;
    int used = 0;
    for (int part : parts) {
        r *= binomial(used + part, part);
        used += part;
    }
    return r;
}

double log2_exact(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log2_exact: needs a positive integer");
    const unsigned msb = boost::multiprecision::msb(v);
    if (msb < 960) return std::log2(v.convert_to<double>());
    // keep the top bits, track the shifted-out exponent
    const unsigned shift = msb - 64;
    BigInt top = v >> shift;
    return static_cast<double>(shift) + std::log2(top.convert_to<double>());
}

Feedback or_channel(const AccessMatrix& x, const StatusVector& s) {
    if (s.n_users != x.n_users)
        throw std::invalid_argument("or_channel: status/matrix dimension mismatch");
    Feedback y;
    y.bits.assign(static_cast<size_t>(x.n_slots), 0);
    for (int i : s.active) {
        const std::uint8_t* row = &x.bits[static_cast<size_t>(i - 1) * x.n_slots];
        for (int t = 0; t < x.n_slots; ++t) y.bits[static_cast<size_t>(t)] |= row[t];
    }
    return y;
}

int distortion(const StatusVector& s, const PartitionVector& z) {
    if (s.n_users != z.n_users())
        throw std::invalid_argument("distortion: dimension mismatch");
    std::vector<char> used(static_cast<size_t>(z.n_groups), 0);
    for (int i : s.active) {
        char& slot = used[static_cast<size_t>(z.label(i)) - 1];
        if (slot) return 1;
        slot = 1;
    }
    return 0;
}

BigInt compatible_status_count(const PartitionVector& z) {
    BigInt r = 1;
    for (int sz : z.group_sizes()) r *= sz;
    return r;
}

BigInt compatible_partition_count(int n, int k, const GroupSizes& sizes) {
    if (sizes.total() != n) throw std::invalid_argument("compatible_partition_count: sizes must sum to N");
    if (sizes.n_groups() != k) throw std::invalid_argument("compatible_partition_count: needs K sizes");
    std::vector<int> reduced;
    reduced.reserve(sizes.sizes.size());
    for (int v : sizes.sizes) reduced.push_back(v - 1);
    BigInt r = multinomial(n - k, reduced);
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

std::vector<StatusVector> enumerate_status_vectors(int n, int k) {
    std::vector<StatusVector> out;
    std::vector<int> pick(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(n, pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace pmac
