#pragma once

// Brute-force references used to check the library. Each one is written
// independently of the code under test and only scales to tiny graphs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sphere/graph.hpp"

namespace sphere::oracle {

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// Dense adjacency weights; 0 means no edge.
inline std::vector<std::vector<double>> adjacency(const Graph& g) {
    const auto n = g.node_count();
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (const auto& e : g.edges()) {
        w[e.u][e.v] = e.weight;
        w[e.v][e.u] = e.weight;
    }
    return w;
}

/// Minimum cost over all simple u-w paths by exhaustive DFS; nullopt if none.
inline std::optional<double> min_simple_path_cost(const Graph& g, NodeId u, NodeId w) {
    const auto adj = adjacency(g);
    const auto n = g.node_count();
    std::vector<bool> on_path(n, false);
    std::optional<double> best;
    std::function<void(NodeId, double)> dfs = [&](NodeId v, double cost) {
        if (v == w) {
            if (!best || cost < *best) {
                best = cost;
            }
            return;
        }
        on_path[v] = true;
        for (NodeId x = 0; x < n; ++x) {
            if (adj[v][x] > 0.0 && !on_path[x]) {
                dfs(x, cost + adj[v][x]);
            }
        }
        on_path[v] = false;
    };
    dfs(u, 0.0);
    return best;
}

/// All-pairs hop distances by Floyd-Warshall on unit weights.
inline std::vector<std::vector<int>> all_pairs_hops(const Graph& g) {
    const auto n = g.node_count();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (std::size_t v = 0; v < n; ++v) {
        d[v][v] = 0;
    }
    for (const auto& e : g.edges()) {
        d[e.u][e.v] = 1;
        d[e.v][e.u] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (d[i][k] + d[k][j] < d[i][j]) {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    return d;
}

/// {x : hops(s, x) <= rs and hops(t, x) <= rt}, ascending.
inline std::vector<NodeId> overlap(const std::vector<std::vector<int>>& hops, NodeId s, NodeId t, int rs,
                                   int rt) {
    std::vector<NodeId> out;
    for (NodeId x = 0; x < hops.size(); ++x) {
        if (hops[s][x] <= rs && hops[t][x] <= rt) {
            out.push_back(x);
        }
    }
    return out;
}

/// Weighted modularity from its textbook definition:
/// Q = sum_c [ L_c / m - (D_c / 2m)^2 ], L_c the internal weight, D_c the degree sum.
inline double modularity(const Graph& g, const std::vector<std::uint32_t>& label) {
    double m = 0.0;
    std::map<std::uint32_t, double> internal;
    std::map<std::uint32_t, double> degree;
    for (const auto& e : g.edges()) {
        m += e.weight;
        degree[label[e.u]] += e.weight;
        degree[label[e.v]] += e.weight;
        if (label[e.u] == label[e.v]) {
            internal[label[e.u]] += e.weight;
        }
    }
    double q = 0.0;
    for (const auto& [c, d] : degree) {
        q += internal[c] / m - (d / (2.0 * m)) * (d / (2.0 * m));
    }
    return q;
}

/// Best modularity over every set partition of the nodes (restricted growth
/// strings). Returns the maximizing labelling and its value.
inline std::pair<std::vector<std::uint32_t>, double> best_partition(const Graph& g) {
    const auto n = g.node_count();
    std::vector<std::uint32_t> label(n, 0);
    std::vector<std::uint32_t> best_label = label;
    double best = -std::numeric_limits<double>::infinity();
    std::size_t count = 0;
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t used) {
        if (i == n) {
            ++count;
            const double q = modularity(g, label);
            if (q > best + 1e-12) {
                best = q;
                best_label = label;
            }
            return;
        }
        for (std::uint32_t c = 0; c <= used; ++c) {
            label[i] = c;
            rec(i + 1, std::max(used, c + 1));
        }
    };
    label[0] = 0;
    rec(1, 1);
    return {best_label, best};
}

/// Number of set partitions visited by best_partition (Bell number).
inline std::size_t bell(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n + 1, std::vector<std::size_t>(n + 1, 0));
    t[0][0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        t[i][0] = t[i - 1][i - 1];
        for (std::size_t j = 1; j <= i; ++j) {
            t[i][j] = t[i][j - 1] + t[i - 1][j - 1];
        }
    }
    return t[n][0];
}

/// Canonical form of a labelling: the set of blocks.
inline std::set<std::set<NodeId>> blocks(const std::vector<std::uint32_t>& label) {
    std::map<std::uint32_t, std::set<NodeId>> by;
    for (NodeId v = 0; v < label.size(); ++v) {
        by[label[v]].insert(v);
    }
    std::set<std::set<NodeId>> out;
    for (auto& [c, members] : by) {
        out.insert(members);
    }
    return out;
}

}  // namespace sphere::oracle
