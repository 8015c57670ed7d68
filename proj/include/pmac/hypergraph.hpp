#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>

#include "pmac/core.hpp"

namespace pmac {

/// K-element vertex subset, stored sorted.
using Edge = std::vector<int>;

/// K-uniform hypergraph over a fixed vertex set 1..N. The vertex set never
/// shrinks under reduction; deleted vertices just become isolated.
class Hypergraph {
public:
    Hypergraph(int n_vertices, int k_uniform);

    static Hypergraph complete(int n, int k);

    int n_vertices() const { return n_; }
    int k_uniform() const { return k_; }
    const std::set<Edge>& edges() const { return edges_; }
    std::size_t n_edges() const { return edges_.size(); }
    bool contains(Edge e) const;
    void insert(Edge e);
    void erase(const Edge& e) { edges_.erase(e); }

private:
    int n_;
    int k_;
    std::set<Edge> edges_;
};

/// One feedback slot applied to the candidate hypergraph.
/// y_t = 0: delete every edge meeting the writer set (vertex deletion).
/// y_t = 1: delete every edge disjoint from the writer set (clique deletion).
Hypergraph apply_slot(const Hypergraph& h, const std::vector<int>& writers, int y_bit);

/// Fold apply_slot over all slots starting from the complete hypergraph.
Hypergraph reduce(int n, int k, const AccessMatrix& x, const Feedback& y);

/// Enumeration oracle for reduce: all s in S_{K;N} with or_channel(x,s) == y.
std::vector<StatusVector> candidate_set(int n, int k, const AccessMatrix& x, const Feedback& y);

/// A K-strong coloring in Z_{K;N} (every color used; isolated vertices filled
/// round-robin), or nullopt when chi_s(H) > K. K=2 runs a parity search per
/// component; K>2 backtracks and is meant for small instances.
std::optional<PartitionVector> strong_color(const Hypergraph& h, int k);

/// Minimum-edge-deletion K-strong-colorable sub-hypergraph with a witness
/// coloring. Exhaustive (coloring enumeration over non-isolated vertices),
/// gated by an instance-size guard; this is the MAP oracle, not a decoder.
std::pair<Hypergraph, PartitionVector> min_deletion_colorable(const Hypergraph& h, int k);

/// K=2 only: some connected component is non-bipartite.
bool has_odd_cycle(const Hypergraph& g);

/// K=2 only: an odd cycle passing through the present edge (u,v) exists,
/// i.e. the biconnected block containing (u,v) is non-bipartite.
bool has_one_odd_cycle(const Hypergraph& g, int u, int v);

/// Graphviz export of a K=2 graph.
std::string to_dot(const Hypergraph& g);

/// Completes a partial coloring (0 = unassigned) to a member of Z_{K;N}:
/// unassigned vertices cover missing colors first, then fill round-robin from
/// color 1; a still-missing color steals a vertex from a class of size >= 2.
std::optional<PartitionVector> complete_coloring(std::vector<int> colors, int k);

}  // namespace pmac
