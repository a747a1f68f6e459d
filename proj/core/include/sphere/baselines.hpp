#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sphere/graph.hpp"
#include "sphere/search.hpp"

namespace sphere {

/// Query-agnostic partition of the node set into cells, with its quotient graph.
struct CellPartition {
    std::vector<std::uint32_t> cell_of;
    std::uint32_t k = 0;
    /// One node per cell; an edge joins two cells iff some edge of the graph
    /// crosses them, weighted by the minimum crossing weight.
    Graph quotient;
    /// Largest cell size divided by smallest.
    double balance_ratio = 1.0;
};

struct CommunityPartition {
    std::vector<std::uint32_t> community_of;
    std::uint32_t count = 0;
    double modularity = 0.0;
    /// Modularity after each aggregation level, in order.
    std::vector<double> level_modularity;
    /// Community graph built the same way as CellPartition::quotient.
    Graph quotient;
};

struct BaselineStats {
    std::size_t coarse_hops = 0;      // length of the quotient path in cells/communities
    std::size_t corridor_nodes = 0;
    bool widened = false;
    bool fallback = false;            // answered by full-graph Dijkstra
};

struct BaselineResult {
    Path path;
    BaselineStats stats;
};

/// The exact reference: Dijkstra on the full graph.
Path dijkstra_full(const Graph& g, NodeId s, NodeId t);

/// Builds a CellPartition (quotient and balance) from a labelling. Labels must
/// be dense in [0, k).
CellPartition make_cell_partition(const Graph& g, std::vector<std::uint32_t> cell_of);

/// Seeded farthest-point region growing into `k` connected cells.
///
/// The first seed is the node farthest (in hops) from a random start node;
/// each further seed maximizes the hop distance to the seeds chosen so far
/// (ties: lowest id). Cells then grow one node at a time, the smallest cell
/// first, each from its own BFS frontier, so every cell stays connected.
/// Nodes in components without a seed form extra cells, so `k` may grow on
/// disconnected input. Throws ArgumentError unless 2 <= k <= node_count.
CellPartition grow_cells(const Graph& g, std::uint32_t k, std::uint64_t seed);

/// Shortest cell path on the quotient, then Dijkstra inside the union of
/// those cells. If t is unreachable there, the corridor is widened once by
/// all quotient neighbors; if still unreachable, falls back to dijkstra_full.
BaselineResult corridor_route(const Graph& g, NodeId s, NodeId t, const CellPartition& part);

/// Weighted modularity of a labelling at the given resolution.
double modularity(const Graph& g, std::span<const std::uint32_t> community_of, double resolution = 1.0);

/// Two-phase Louvain (local moves over a seeded node order, then
/// aggregation) with resolution 1.0 on raw edge weights, repeated until a
/// level improves modularity by less than 1e-7.
CommunityPartition louvain(const Graph& g, std::uint64_t seed);

/// Community-graph routing refined by Dijkstra on the union of the
/// communities along the coarse path; same widen-then-fallback policy as
/// corridor_route.
BaselineResult louvain_route(const Graph& g, NodeId s, NodeId t, const CommunityPartition& part);

}  // namespace sphere
