#include "sphere/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <utility>

#include "sphere/error.hpp"

namespace sphere {

namespace {

void require_node(const Graph& g, NodeId v, const char* what) {
    if (!g.contains(v)) {
        throw ArgumentError(std::string(what) + ": node id " + std::to_string(v) + " out of range");
    }
}

}  // namespace

HopDistances bfs_hops(const Graph& g, NodeId source, std::optional<HopCount> cap) {
    require_node(g, source, "bfs_hops");
    HopDistances out;
    out.source = source;
    out.cap = cap;
    out.dist.assign(g.node_count(), kUnreached);
    out.parent.assign(g.node_count(), kInvalidNode);
    out.dist[source] = 0;
    out.order.push_back(source);
    const HopCount limit = cap.value_or(kUnreached - 1);
    for (std::size_t head = 0; head < out.order.size(); ++head) {
        const NodeId u = out.order[head];
        const HopCount du = out.dist[u];
        if (du >= limit) {
            // Queue is in nondecreasing distance order; everything after is at the cap too.
            break;
        }
        for (NodeId v : g.neighbors(u)) {
            if (out.dist[v] == kUnreached) {
                out.dist[v] = du + 1;
                out.parent[v] = u;
                out.order.push_back(v);
            }
        }
    }
    return out;
}

HopCount hop_distance(const Graph& g, NodeId s, NodeId t) {
    require_node(g, s, "hop_distance");
    require_node(g, t, "hop_distance");
    if (s == t) {
        return 0;
    }
    std::vector<HopCount> dist_fwd(g.node_count(), kUnreached);
    std::vector<HopCount> dist_bwd(g.node_count(), kUnreached);
    std::vector<NodeId> frontier_fwd{s};
    std::vector<NodeId> frontier_bwd{t};
    dist_fwd[s] = 0;
    dist_bwd[t] = 0;
    std::vector<NodeId> next;

    while (!frontier_fwd.empty() && !frontier_bwd.empty()) {
        const bool forward = frontier_fwd.size() <= frontier_bwd.size();
        auto& frontier = forward ? frontier_fwd : frontier_bwd;
        auto& mine = forward ? dist_fwd : dist_bwd;
        const auto& theirs = forward ? dist_bwd : dist_fwd;

        // Expand one full level; the first level that touches the other side
        // yields the exact distance as the minimum over all touching arcs.
        HopCount best = kUnreached;
        next.clear();
        for (NodeId u : frontier) {
            for (NodeId v : g.neighbors(u)) {
                if (theirs[v] != kUnreached) {
                    best = std::min(best, mine[u] + 1 + theirs[v]);
                }
                if (mine[v] == kUnreached) {
                    mine[v] = mine[u] + 1;
                    next.push_back(v);
                }
            }
        }
        if (best != kUnreached) {
            return best;
        }
        frontier.swap(next);
    }
    throw DisconnectedError("node " + std::to_string(t) + " is not reachable from " + std::to_string(s));
}

Path dijkstra(const Graph& g, NodeId u, NodeId w) {
    require_node(g, u, "dijkstra");
    require_node(g, w, "dijkstra");
    if (u == w) {
        return Path{{u}, 0.0};
    }
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(g.node_count(), kInf);
    std::vector<NodeId> parent(g.node_count(), kInvalidNode);
    using Entry = std::pair<double, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[u] = 0.0;
    heap.emplace(0.0, u);
    while (!heap.empty()) {
        auto [d, x] = heap.top();
        heap.pop();
        if (d > dist[x]) {
            continue;  // stale
        }
        if (x == w) {
            break;
        }
        auto nb = g.neighbors(x);
        auto ws = g.weights(x);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const double nd = d + ws[i];
            if (nd < dist[nb[i]]) {
                dist[nb[i]] = nd;
                parent[nb[i]] = x;
                heap.emplace(nd, nb[i]);
            }
        }
    }
    if (dist[w] == kInf) {
        throw DisconnectedError("node " + std::to_string(w) + " is not reachable from " + std::to_string(u));
    }
    Path path;
    path.cost = dist[w];
    for (NodeId x = w; x != kInvalidNode; x = parent[x]) {
        path.nodes.push_back(x);
    }
    std::reverse(path.nodes.begin(), path.nodes.end());
    return path;
}

std::optional<std::string> check_path(const Graph& g, std::span<const NodeId> nodes, NodeId from,
                                      NodeId to, double cost) {
    if (nodes.empty()) {
        return "empty path";
    }
    if (nodes.front() != from || nodes.back() != to) {
        return "path endpoints " + std::to_string(nodes.front()) + ".." + std::to_string(nodes.back()) +
               " do not match terminals " + std::to_string(from) + ".." + std::to_string(to);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        auto w = g.edge_weight(nodes[i], nodes[i + 1]);
        if (!w) {
            return "missing edge " + std::to_string(nodes[i]) + "-" + std::to_string(nodes[i + 1]) +
                   " at position " + std::to_string(i);
        }
        sum += *w;
    }
    if (std::abs(sum - cost) > 1e-9 * std::max(1.0, std::abs(sum))) {
        return "cost mismatch: reported " + std::to_string(cost) + ", edges sum to " + std::to_string(sum);
    }
    return std::nullopt;
}

double path_cost(const Graph& g, std::span<const NodeId> nodes) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        auto w = g.edge_weight(nodes[i], nodes[i + 1]);
        if (!w) {
            throw ArgumentError("missing edge " + std::to_string(nodes[i]) + "-" + std::to_string(nodes[i + 1]));
        }
        sum += *w;
    }
    return sum;
}

}  // namespace sphere
