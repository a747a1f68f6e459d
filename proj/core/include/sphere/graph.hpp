#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sphere {

using NodeId = std::uint32_t;
inline constexpr NodeId kInvalidNode = static_cast<NodeId>(-1);

struct Edge {
    NodeId u;
    NodeId v;
    double weight;
};

/// Immutable undirected weighted graph in compressed adjacency form.
///
/// Every undirected edge is stored as two arcs. Neighbor lists are sorted by
/// id, weights are strictly positive, there are no self-loops and at most one
/// edge per unordered pair.
class Graph {
  public:
    Graph() = default;

    /// Builds a graph from an undirected edge list. Repeated pairs collapse to
    /// the minimum weight; `conflicts` (if given) receives the number of
    /// repeats whose weight differed from the one already seen.
    /// Throws ArgumentError on self-loops, bad ids, or non-positive weights.
    static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                            std::size_t* conflicts = nullptr);

    /// Adopts prebuilt arrays (e.g. from the binary cache) after validating them.
    static Graph from_csr(std::vector<std::uint64_t> offsets, std::vector<NodeId> targets,
                          std::vector<double> weights);

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }
    std::size_t arc_count() const noexcept { return targets_.size(); }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::span<const double> weights(NodeId v) const {
        return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

    bool contains(NodeId v) const noexcept { return v < node_count(); }
    std::optional<double> edge_weight(NodeId u, NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const { return edge_weight(u, v).has_value(); }

    /// Undirected edges with u < v, ordered by (u, v).
    std::vector<Edge> edges() const;

    const std::vector<std::uint64_t>& offsets() const noexcept { return offsets_; }
    const std::vector<NodeId>& targets() const noexcept { return targets_; }
    const std::vector<double>& arc_weights() const noexcept { return weights_; }

    /// FNV-1a over node count and the adjacency arrays.
    std::uint64_t content_hash() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    std::vector<std::uint64_t> offsets_;
    std::vector<NodeId> targets_;
    std::vector<double> weights_;
};

/// An induced subgraph together with the node-id mapping to its parent.
///
/// Local ids are assigned in ascending parent-id order, so `to_parent` is
/// strictly increasing and `from_parent` is a binary search.
class SubgraphView {
  public:
    SubgraphView() = default;
    SubgraphView(Graph graph, std::vector<NodeId> to_parent);

    const Graph& graph() const noexcept { return graph_; }
    std::size_t node_count() const noexcept { return graph_.node_count(); }
    std::size_t edge_count() const noexcept { return graph_.edge_count(); }

    NodeId to_parent(NodeId local) const { return to_parent_[local]; }
    std::optional<NodeId> from_parent(NodeId parent) const;
    std::span<const NodeId> parent_ids() const noexcept { return to_parent_; }

    /// Rewrites the mapping through an outer view: ids that pointed into the
    /// outer view's graph now point into the outer view's parent.
    SubgraphView lifted(std::span<const NodeId> outer_to_parent) const&;
    SubgraphView lifted(std::span<const NodeId> outer_to_parent) &&;

  private:
    Graph graph_;
    std::vector<NodeId> to_parent_;
};

/// Edges of `g` with both endpoints in `nodes`. Duplicates in `nodes` are ignored.
/// Throws ArgumentError on an empty set or out-of-range id.
SubgraphView induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

bool is_connected(const Graph& g);

/// Component label per node; labels are dense and numbered in order of the
/// smallest node id in each component.
std::vector<std::uint32_t> connected_components(const Graph& g);

/// Induced view on the largest connected component (ties: lowest label).
SubgraphView largest_component(const Graph& g);

}  // namespace sphere
