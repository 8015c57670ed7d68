#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pmac {

// User ids and group labels are 1-based everywhere in the public interface.

/// Active-user indicator: which K of the N users are active.
struct StatusVector {
    int n_users = 0;
    std::vector<int> active;  // sorted, distinct, each in [1, n_users]

    StatusVector() = default;
    StatusVector(int n, std::vector<int> active_ids);

    int n_active() const { return static_cast<int>(active.size()); }
    bool is_active(int user) const;
};

/// Ordered K-partition: labels[i] is the group of user i+1, groups 1..K,
/// every group nonempty.
struct PartitionVector {
    int n_groups = 0;
    std::vector<int> labels;

    PartitionVector() = default;
    PartitionVector(int k, std::vector<int> lab);

    int n_users() const { return static_cast<int>(labels.size()); }
    int label(int user) const { return labels[static_cast<size_t>(user) - 1]; }
    std::vector<int> group_sizes() const;
};

/// Group sizes n_1..n_K, each >= 1.
struct GroupSizes {
    std::vector<int> sizes;

    GroupSizes() = default;
    explicit GroupSizes(std::vector<int> s);

    int n_groups() const { return static_cast<int>(sizes.size()); }
    int total() const;
};

/// N x T binary accessing matrix, row-major so a user's codeword is contiguous.
struct AccessMatrix {
    int n_users = 0;
    int n_slots = 0;
    std::vector<std::uint8_t> bits;  // bits[(i-1)*T + (t-1)]

    AccessMatrix() = default;
    AccessMatrix(int n, int t);
    AccessMatrix(int n, int t, std::vector<std::uint8_t> b);

    std::uint8_t at(int user, int slot) const {
        return bits[static_cast<size_t>(user - 1) * n_slots + (slot - 1)];
    }
    void set(int user, int slot, std::uint8_t v) {
        bits[static_cast<size_t>(user - 1) * n_slots + (slot - 1)] = v;
    }
};

/// Channel feedback, one bit per slot.
struct Feedback {
    std::vector<std::uint8_t> bits;

    int n_slots() const { return static_cast<int>(bits.size()); }
    std::uint8_t at(int slot) const { return bits[static_cast<size_t>(slot) - 1]; }
};

}  // namespace pmac
