#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sphere/graph.hpp"

namespace sphere {

using HopCount = std::uint32_t;
inline constexpr HopCount kUnreached = std::numeric_limits<HopCount>::max();

/// Result of a (possibly capped) breadth-first search.
struct HopDistances {
    NodeId source = kInvalidNode;
    std::vector<HopCount> dist;   // kUnreached for nodes not visited
    std::vector<NodeId> parent;   // kInvalidNode for the source and unreached nodes
    std::vector<NodeId> order;    // reached nodes in discovery order (nondecreasing dist)
    std::optional<HopCount> cap;

    bool reached(NodeId v) const { return dist[v] != kUnreached; }
};

/// BFS from `source`, stopping after depth `cap` when given. Parents are the
/// first discoverer in queue order with ascending adjacency.
HopDistances bfs_hops(const Graph& g, NodeId source, std::optional<HopCount> cap = std::nullopt);

/// Exact hop distance by alternating bidirectional BFS (smaller frontier
/// expands first). Throws DisconnectedError if `t` is unreachable.
HopCount hop_distance(const Graph& g, NodeId s, NodeId t);

struct Path {
    std::vector<NodeId> nodes;
    double cost = 0.0;
};

/// Minimum-cost path by Dijkstra with a lazy-deletion binary heap. Equal keys
/// pop the smaller node id first. Throws DisconnectedError if `w` is unreachable.
Path dijkstra(const Graph& g, NodeId u, NodeId w);

/// Checks that `nodes` is a walk in `g` from `from` to `to` whose edge weights
/// sum to `cost` within 1e-9 relative. Returns a description of the first
/// problem found, or nullopt when valid.
std::optional<std::string> check_path(const Graph& g, std::span<const NodeId> nodes, NodeId from,
                                      NodeId to, double cost);

/// Sum of edge weights along `nodes`; throws ArgumentError on a missing edge.
double path_cost(const Graph& g, std::span<const NodeId> nodes);

}  // namespace sphere
