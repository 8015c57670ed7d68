#include "pmac/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <sstream>

namespace pmac {

std::optional<PartitionVector> complete_coloring(std::vector<int> color, int k) {
    const int n = static_cast<int>(color.size());
    if (n < k) return std::nullopt;
    std::vector<int> class_size(static_cast<size_t>(k), 0);
    for (int c : color)
        if (c > 0) ++class_size[static_cast<size_t>(c) - 1];
    auto missing = [&]() {
        for (int c = 1; c <= k; ++c)
            if (class_size[static_cast<size_t>(c) - 1] == 0) return c;
        return 0;
    };
    int rr = 1;
    for (int i = 0; i < n; ++i) {
        if (color[static_cast<size_t>(i)] != 0) continue;
        int c = missing();
        if (c == 0) {
            c = rr;
            rr = rr % k + 1;
        }
        color[static_cast<size_t>(i)] = c;
        ++class_size[static_cast<size_t>(c) - 1];
    }
    for (int c = missing(); c != 0; c = missing()) {
        bool moved = false;
        for (int i = 0; i < n && !moved; ++i) {
            int& ci = color[static_cast<size_t>(i)];
            if (class_size[static_cast<size_t>(ci) - 1] >= 2) {
                --class_size[static_cast<size_t>(ci) - 1];
                ci = c;
                ++class_size[static_cast<size_t>(c) - 1];
                moved = true;
            }
        }
        if (!moved) return std::nullopt;
    }
    return PartitionVector(k, std::move(color));
}

namespace {

std::vector<std::vector<int>> adjacency_k2(const Hypergraph& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.n_vertices()) + 1);
    for (const Edge& e : g.edges()) {
        adj[static_cast<size_t>(e[0])].push_back(e[1]);
        adj[static_cast<size_t>(e[1])].push_back(e[0]);
    }
    return adj;
}

// Parity BFS; returns colors (1/2, 0 = untouched) or nullopt on odd cycle.
std::optional<std::vector<int>> two_color(const Hypergraph& g) {
    const auto adj = adjacency_k2(g);
    const int n = g.n_vertices();
    std::vector<int> color(static_cast<size_t>(n) + 1, 0);
    for (int start = 1; start <= n; ++start) {
        if (color[static_cast<size_t>(start)] != 0 || adj[static_cast<size_t>(start)].empty())
            continue;
        color[static_cast<size_t>(start)] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : adj[static_cast<size_t>(v)]) {
                if (color[static_cast<size_t>(w)] == 0) {
                    color[static_cast<size_t>(w)] = 3 - color[static_cast<size_t>(v)];
                    queue.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

}  // namespace

Hypergraph::Hypergraph(int n_vertices, int k_uniform) : n_(n_vertices), k_(k_uniform) {
    if (n_ < 1 || k_ < 1 || k_ > n_)
        throw std::invalid_argument("Hypergraph: need 1 <= K <= N");
}

Hypergraph Hypergraph::complete(int n, int k) {
    Hypergraph h(n, k);
    for (const StatusVector& s : enumerate_status_vectors(n, k)) h.edges_.insert(s.active);
    return h;
}

bool Hypergraph::contains(Edge e) const {
    std::sort(e.begin(), e.end());
    return edges_.count(e) > 0;
}

void Hypergraph::insert(Edge e) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != k_)
        throw std::invalid_argument("Hypergraph::insert: edge arity mismatch");
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 1 || e[i] > n_) throw std::invalid_argument("Hypergraph::insert: vertex out of range");
        if (i > 0 && e[i] == e[i - 1]) throw std::invalid_argument("Hypergraph::insert: repeated vertex");
    }
    edges_.insert(std::move(e));
}

Hypergraph apply_slot(const Hypergraph& h, const std::vector<int>& writers, int y_bit) {
    std::vector<char> writes(static_cast<size_t>(h.n_vertices()) + 1, 0);
    for (int w : writers) {
        if (w < 1 || w > h.n_vertices())
            throw std::invalid_argument("apply_slot: writer out of range");
        writes[static_cast<size_t>(w)] = 1;
    }
    Hypergraph out(h.n_vertices(), h.k_uniform());
    for (const Edge& e : h.edges()) {
        bool meets = false;
        for (int v : e)
            if (writes[static_cast<size_t>(v)]) {
                meets = true;
                break;
            }
        const bool deleted = y_bit ? !meets : meets;
        if (!deleted) out.insert(e);
    }
    return out;
}

Hypergraph reduce(int n, int k, const AccessMatrix& x, const Feedback& y) {
    if (x.n_users != n) throw std::invalid_argument("reduce: matrix dimension mismatch");
    if (y.n_slots() != x.n_slots) throw std::invalid_argument("reduce: feedback length mismatch");
    Hypergraph h = Hypergraph::complete(n, k);
    for (int t = 1; t <= x.n_slots; ++t) {
        std::vector<int> writers;
        for (int i = 1; i <= n; ++i)
            if (x.at(i, t)) writers.push_back(i);
        h = apply_slot(h, writers, y.at(t));
    }
    return h;
}

std::vector<StatusVector> candidate_set(int n, int k, const AccessMatrix& x, const Feedback& y) {
    std::vector<StatusVector> out;
    for (const StatusVector& s : enumerate_status_vectors(n, k)) {
        if (or_channel(x, s).bits == y.bits) out.push_back(s);
    }
    return out;
}

std::optional<PartitionVector> strong_color(const Hypergraph& h, int k) {
    const int n = h.n_vertices();
    if (n < k) return std::nullopt;
    if (k == 2 && h.k_uniform() == 2) {
        auto colors = two_color(h);
        if (!colors) return std::nullopt;
        colors->erase(colors->begin());  // drop the dummy 0 slot
        return complete_coloring(std::move(*colors), k);
    }

    // backtracking over the vertices that actually occur in edges
    std::vector<std::vector<const Edge*>> incident(static_cast<size_t>(n) + 1);
    for (const Edge& e : h.edges())
        for (int v : e) incident[static_cast<size_t>(v)].push_back(&e);
    std::vector<int> order;
    for (int v = 1; v <= n; ++v)
        if (!incident[static_cast<size_t>(v)].empty()) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return incident[static_cast<size_t>(a)].size() > incident[static_cast<size_t>(b)].size();
    });

    std::vector<int> color(static_cast<size_t>(n) + 1, 0);
    std::function<bool(size_t, int)> assign = [&](size_t idx, int max_used) -> bool {
        if (idx == order.size()) return true;
        const int v = order[idx];
        const int cap = std::min(k, max_used + 1);  // color symmetry break
        for (int c = 1; c <= cap; ++c) {
            bool ok = true;
            for (const Edge* e : incident[static_cast<size_t>(v)]) {
                for (int w : *e)
                    if (w != v && color[static_cast<size_t>(w)] == c) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (!ok) continue;
            color[static_cast<size_t>(v)] = c;
            if (assign(idx + 1, std::max(max_used, c))) return true;
            color[static_cast<size_t>(v)] = 0;
        }
        return false;
    };
    if (!assign(0, 0)) return std::nullopt;
    color.erase(color.begin());
    return complete_coloring(std::move(color), k);
}

std::pair<Hypergraph, PartitionVector> min_deletion_colorable(const Hypergraph& h, int k) {
    const int n = h.n_vertices();
    if (n < k) throw std::invalid_argument("min_deletion_colorable: N < K");
    std::vector<int> active;  // vertices with degree > 0
    {
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (const Edge& e : h.edges())
            for (int v : e) seen[static_cast<size_t>(v)] = 1;
        for (int v = 1; v <= n; ++v)
            if (seen[static_cast<size_t>(v)]) active.push_back(v);
    }
    const size_t m = active.size();
    if (m > 0 && m * std::log2(static_cast<double>(k)) > 26.0)
        throw std::invalid_argument("min_deletion_colorable: instance too large for the oracle");

    std::vector<int> best_color(static_cast<size_t>(n) + 1, 0);
    size_t best_violations = h.n_edges() + 1;
    std::vector<int> color(static_cast<size_t>(n) + 1, 0);
    std::function<void(size_t, int)> scan = [&](size_t idx, int max_used) {
        if (idx == m) {
            size_t violations = 0;
            for (const Edge& e : h.edges()) {
                bool bad = false;
                for (size_t a = 0; a + 1 < e.size() && !bad; ++a)
                    for (size_t b = a + 1; b < e.size(); ++b)
                        if (color[static_cast<size_t>(e[a])] == color[static_cast<size_t>(e[b])]) {
                            bad = true;
                            break;
                        }
                if (bad) ++violations;
            }
            if (violations < best_violations) {
                best_violations = violations;
                best_color = color;
            }
            return;
        }
        const int cap = std::min(k, max_used + 1);
        for (int c = 1; c <= cap && best_violations > 0; ++c) {
            color[static_cast<size_t>(active[idx])] = c;
            scan(idx + 1, std::max(max_used, c));
        }
    };
    if (m == 0) best_violations = 0;
    else scan(0, 0);

    Hypergraph out(n, h.k_uniform());
    for (const Edge& e : h.edges()) {
        bool bad = false;
        for (size_t a = 0; a + 1 < e.size() && !bad; ++a)
            for (size_t b = a + 1; b < e.size(); ++b)
                if (best_color[static_cast<size_t>(e[a])] == best_color[static_cast<size_t>(e[b])]) {
                    bad = true;
                    break;
                }
        if (!bad) out.insert(e);
    }
    best_color.erase(best_color.begin());
    auto z = complete_coloring(std::move(best_color), k);
    if (!z) throw std::logic_error("min_deletion_colorable: completion failed");
    return {std::move(out), std::move(*z)};
}

bool has_odd_cycle(const Hypergraph& g) {
    if (g.k_uniform() != 2) throw std::invalid_argument("has_odd_cycle: requires K=2");
    return !two_color(g).has_value();
}

bool has_one_odd_cycle(const Hypergraph& g, int u, int v) {
    if (g.k_uniform() != 2) throw std::invalid_argument("has_one_odd_cycle: requires K=2");
    Edge e{std::min(u, v), std::max(u, v)};
    if (!g.contains(e)) throw std::invalid_argument("has_one_odd_cycle: edge absent");

    // Biconnected components via iterative DFS with an edge stack; the block
    // holding (u,v) is then checked for bipartiteness.
    const auto adj = adjacency_k2(g);
    const int n = g.n_vertices();
    std::vector<int> disc(static_cast<size_t>(n) + 1, 0), low(static_cast<size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::pair<int, int>> target_block;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int at, int parent) {
        disc[static_cast<size_t>(at)] = low[static_cast<size_t>(at)] = ++timer;
        bool skipped_parent = false;
        for (int to : adj[static_cast<size_t>(at)]) {
            if (to == parent && !skipped_parent) {
                skipped_parent = true;  // parallel edges don't occur in a simple graph
                continue;
            }
            if (!disc[static_cast<size_t>(to)]) {
                edge_stack.emplace_back(at, to);
                dfs(to, at);
                low[static_cast<size_t>(at)] =
                    std::min(low[static_cast<size_t>(at)], low[static_cast<size_t>(to)]);
                if (low[static_cast<size_t>(to)] >= disc[static_cast<size_t>(at)]) {
                    std::vector<std::pair<int, int>> block;
                    while (true) {
                        auto top = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(top);
                        if (top == std::make_pair(at, to)) break;
                    }
                    for (auto& be : block) {
                        Edge ne{std::min(be.first, be.second), std::max(be.first, be.second)};
                        if (ne == e) {
                            target_block = block;
                            break;
                        }
                    }
                }
            } else if (disc[static_cast<size_t>(to)] < disc[static_cast<size_t>(at)]) {
                edge_stack.emplace_back(at, to);
                low[static_cast<size_t>(at)] =
                    std::min(low[static_cast<size_t>(at)], disc[static_cast<size_t>(to)]);
            }
        }
    };
    for (int s = 1; s <= n && target_block.empty(); ++s)
        if (!disc[static_cast<size_t>(s)]) dfs(s, 0);
    if (target_block.empty()) return false;  // (u,v) is a bridge

    Hypergraph block_graph(n, 2);
    for (auto& be : target_block)
        block_graph.insert({be.first, be.second});
    // every edge of a 2-connected non-bipartite graph lies on an odd cycle
    return has_odd_cycle(block_graph);
}

std::string to_dot(const Hypergraph& g) {
    if (g.k_uniform() != 2) throw std::invalid_argument("to_dot: requires K=2");
    std::ostringstream out;
    out << "graph H {\n";
    for (int v = 1; v <= g.n_vertices(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) out << "  " << e[0] << " -- " << e[1] << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace pmac
