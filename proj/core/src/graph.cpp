#include "sphere/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "sphere/error.hpp"
#include "sphere/hash.hpp"

namespace sphere {

namespace {

struct Arc {
    NodeId from;
    NodeId to;
    double weight;
};

}  // namespace

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges, std::size_t* conflicts) {
    if (node_count == 0) {
        throw ArgumentError("graph must have at least one node");
    }
    if (node_count >= kInvalidNode) {
        throw ArgumentError("node count exceeds 32-bit id range");
    }

    std::vector<Arc> arcs;
    arcs.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        if (e.u >= node_count || e.v >= node_count) {
            throw ArgumentError("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                std::to_string(e.v));
        }
        if (e.u == e.v) {
            throw ArgumentError("self-loop on node " + std::to_string(e.u));
        }
        if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
            throw ArgumentError("non-positive or non-finite weight on edge " + std::to_string(e.u) +
                                "-" + std::to_string(e.v));
        }
        arcs.push_back({e.u, e.v, e.weight});
        arcs.push_back({e.v, e.u, e.weight});
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
        if (a.from != b.from) {
            return a.from < b.from;
        }
        return a.to != b.to ? a.to < b.to : a.weight < b.weight;
    });

    // Each undirected repeat shows up twice (once per direction); count it once.
    std::size_t conflict_arcs = 0;
    Graph g;
    g.offsets_.assign(node_count + 1, 0);
    g.targets_.reserve(arcs.size());
    g.weights_.reserve(arcs.size());
    for (std::size_t i = 0; i < arcs.size();) {
        std::size_t j = i;
        double w = arcs[i].weight;
        while (++j < arcs.size() && arcs[j].from == arcs[i].from && arcs[j].to == arcs[i].to) {
            if (arcs[j].weight != arcs[i].weight) {
                ++conflict_arcs;
            }
            w = std::min(w, arcs[j].weight);
        }
        g.targets_.push_back(arcs[i].to);
        g.weights_.push_back(w);
        ++g.offsets_[arcs[i].from + 1];
        i = j;
    }
    for (std::size_t v = 0; v < node_count; ++v) {
        g.offsets_[v + 1] += g.offsets_[v];
    }
    if (conflicts != nullptr) {
        *conflicts = conflict_arcs / 2;
    }
    return g;
}

Graph Graph::from_csr(std::vector<std::uint64_t> offsets, std::vector<NodeId> targets,
                      std::vector<double> weights) {
    if (offsets.size() < 2 || offsets.front() != 0 || offsets.back() != targets.size() ||
        targets.size() != weights.size()) {
        throw ArgumentError("inconsistent adjacency arrays");
    }
    const std::size_t n = offsets.size() - 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (offsets[v] > offsets[v + 1]) {
            throw ArgumentError("offsets not monotone");
        }
        for (std::uint64_t i = offsets[v]; i < offsets[v + 1]; ++i) {
            if (targets[i] >= n || targets[i] == v || !(weights[i] > 0.0)) {
                throw ArgumentError("invalid arc at node " + std::to_string(v));
            }
            if (i > offsets[v] && targets[i - 1] >= targets[i]) {
                throw ArgumentError("unsorted adjacency at node " + std::to_string(v));
            }
        }
    }
    Graph g;
    g.offsets_ = std::move(offsets);
    g.targets_ = std::move(targets);
    g.weights_ = std::move(weights);
    for (NodeId v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        auto ws = g.weights(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (g.edge_weight(nb[i], v) != ws[i]) {
                throw ArgumentError("asymmetric arc " + std::to_string(v) + "-" + std::to_string(nb[i]));
            }
        }
    }
    return g;
}

std::optional<double> Graph::edge_weight(NodeId u, NodeId v) const {
    if (!contains(u) || !contains(v)) {
        return std::nullopt;
    }
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) {
        return std::nullopt;
    }
    return weights_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u) {
        auto nb = neighbors(u);
        auto ws = weights(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (u < nb[i]) {
                out.push_back({u, nb[i], ws[i]});
            }
        }
    }
    return out;
}

std::uint64_t Graph::content_hash() const {
    Fnv1a h;
    h.add_value(static_cast<std::uint64_t>(node_count()));
    for (auto o : offsets_) {
        h.add_value(o);
    }
    for (auto t : targets_) {
        h.add_value(t);
    }
    for (auto w : weights_) {
        h.add_value(std::bit_cast<std::uint64_t>(w));
    }
    return h.digest();
}

SubgraphView::SubgraphView(Graph graph, std::vector<NodeId> to_parent)
    : graph_(std::move(graph)), to_parent_(std::move(to_parent)) {
    if (to_parent_.size() != graph_.node_count()) {
        throw ArgumentError("subgraph mapping size does not match node count");
    }
    if (!std::is_sorted(to_parent_.begin(), to_parent_.end()) ||
        std::adjacent_find(to_parent_.begin(), to_parent_.end()) != to_parent_.end()) {
        throw ArgumentError("subgraph mapping must be strictly increasing");
    }
}

std::optional<NodeId> SubgraphView::from_parent(NodeId parent) const {
    auto it = std::lower_bound(to_parent_.begin(), to_parent_.end(), parent);
    if (it == to_parent_.end() || *it != parent) {
        return std::nullopt;
    }
    return static_cast<NodeId>(it - to_parent_.begin());
}

SubgraphView SubgraphView::lifted(std::span<const NodeId> outer_to_parent) const& {
    SubgraphView copy = *this;
    return std::move(copy).lifted(outer_to_parent);
}

SubgraphView SubgraphView::lifted(std::span<const NodeId> outer_to_parent) && {
    // Both mappings are increasing, so the composition stays increasing.
    for (auto& id : to_parent_) {
        id = outer_to_parent[id];
    }
    return std::move(*this);
}

SubgraphView induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
    if (nodes.empty()) {
        throw ArgumentError("induced_subgraph: empty node set");
    }
    std::vector<NodeId> members(nodes.begin(), nodes.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.back() >= g.node_count()) {
        throw ArgumentError("induced_subgraph: node id " + std::to_string(members.back()) +
                            " out of range");
    }

    auto local_of = [&](NodeId parent) -> NodeId {
        auto it = std::lower_bound(members.begin(), members.end(), parent);
        return (it != members.end() && *it == parent) ? static_cast<NodeId>(it - members.begin())
                                                      : kInvalidNode;
    };

    std::vector<std::uint64_t> offsets(members.size() + 1, 0);
    std::vector<NodeId> targets;
    std::vector<double> weights;
    for (std::size_t i = 0; i < members.size(); ++i) {
        auto nb = g.neighbors(members[i]);
        auto ws = g.weights(members[i]);
        for (std::size_t j = 0; j < nb.size(); ++j) {
            NodeId local = local_of(nb[j]);
            if (local != kInvalidNode) {
                targets.push_back(local);
                weights.push_back(ws[j]);
            }
        }
        offsets[i + 1] = targets.size();
    }
    // Parent adjacency is sorted and the local mapping is monotone, so local
    // adjacency is sorted too; from_csr re-validates regardless.
    return SubgraphView(Graph::from_csr(std::move(offsets), std::move(targets), std::move(weights)),
                        std::move(members));
}

std::vector<std::uint32_t> connected_components(const Graph& g) {
    constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> label(g.node_count(), kNone);
    std::vector<NodeId> queue;
    std::uint32_t next = 0;
    for (NodeId root = 0; root < g.node_count(); ++root) {
        if (label[root] != kNone) {
            continue;
        }
        queue.assign(1, root);
        label[root] = next;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (NodeId v : g.neighbors(queue[head])) {
                if (label[v] == kNone) {
                    label[v] = next;
                    queue.push_back(v);
                }
            }
        }
        ++next;
    }
    return label;
}

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) {
        return false;
    }
    auto label = connected_components(g);
    return std::all_of(label.begin(), label.end(), [](std::uint32_t c) { return c == 0; });
}

SubgraphView largest_component(const Graph& g) {
    auto label = connected_components(g);
    std::vector<std::size_t> size;
    for (auto c : label) {
        if (c >= size.size()) {
            size.resize(c + 1, 0);
        }
        ++size[c];
    }
    const auto best = static_cast<std::uint32_t>(std::max_element(size.begin(), size.end()) - size.begin());
    std::vector<NodeId> nodes;
    nodes.reserve(size[best]);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (label[v] == best) {
            nodes.push_back(v);
        }
    }
    return induced_subgraph(g, nodes);
}

}  // namespace sphere
