#include "sphere/baselines.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "sphere/error.hpp"
#include "sphere/rng.hpp"

namespace sphere {

namespace {

Graph build_quotient(const Graph& g, std::span<const std::uint32_t> label, std::uint32_t count) {
    std::vector<Edge> crossing;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto nb = g.neighbors(u);
        auto ws = g.weights(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (u < nb[i] && label[u] != label[nb[i]]) {
                crossing.push_back({label[u], label[nb[i]], ws[i]});
            }
        }
    }
    // from_edges keeps the minimum weight per cell pair.
    return Graph::from_edges(count, crossing);
}

/// Dijkstra restricted to the nodes whose label is marked in `allowed`.
std::optional<Path> route_within(const Graph& g, NodeId s, NodeId t, std::span<const std::uint32_t> label,
                                 const std::vector<bool>& allowed, std::size_t& corridor_nodes) {
    std::vector<NodeId> nodes;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (allowed[label[v]]) {
            nodes.push_back(v);
        }
    }
    corridor_nodes = nodes.size();
    auto view = induced_subgraph(g, nodes);
    try {
        Path local = dijkstra(view.graph(), *view.from_parent(s), *view.from_parent(t));
        for (auto& v : local.nodes) {
            v = view.to_parent(v);
        }
        return local;
    } catch (const DisconnectedError&) {
        return std::nullopt;
    }
}

BaselineResult coarse_then_refine(const Graph& g, NodeId s, NodeId t, std::span<const std::uint32_t> label,
                                  const Graph& quotient) {
    if (!g.contains(s) || !g.contains(t)) {
        throw ArgumentError("baseline route: terminal out of range");
    }
    if (label.size() != g.node_count()) {
        throw ArgumentError("baseline route: partition does not match graph");
    }
    BaselineResult result;
    Path coarse;
    try {
        coarse = dijkstra(quotient, label[s], label[t]);
    } catch (const DisconnectedError&) {
        result.path = dijkstra_full(g, s, t);
        result.stats.fallback = true;
        return result;
    }
    result.stats.coarse_hops = coarse.nodes.size() - 1;

    std::vector<bool> allowed(quotient.node_count(), false);
    for (NodeId c : coarse.nodes) {
        allowed[c] = true;
    }
    if (auto path = route_within(g, s, t, label, allowed, result.stats.corridor_nodes)) {
        result.path = std::move(*path);
        return result;
    }

    result.stats.widened = true;
    auto widened = allowed;
    for (NodeId c : coarse.nodes) {
        for (NodeId nb : quotient.neighbors(c)) {
            widened[nb] = true;
        }
    }
    if (auto path = route_within(g, s, t, label, widened, result.stats.corridor_nodes)) {
        result.path = std::move(*path);
        return result;
    }

    result.stats.fallback = true;
    result.path = dijkstra_full(g, s, t);
    return result;
}

}  // namespace

Path dijkstra_full(const Graph& g, NodeId s, NodeId t) { return dijkstra(g, s, t); }

CellPartition make_cell_partition(const Graph& g, std::vector<std::uint32_t> cell_of) {
    if (cell_of.size() != g.node_count()) {
        throw ArgumentError("cell labelling size does not match graph");
    }
    CellPartition part;
    part.k = cell_of.empty() ? 0 : *std::max_element(cell_of.begin(), cell_of.end()) + 1;
    std::vector<std::size_t> sizes(part.k, 0);
    for (auto c : cell_of) {
        ++sizes[c];
    }
    if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end()) {
        throw ArgumentError("cell labels must be dense");
    }
    part.balance_ratio = static_cast<double>(*std::max_element(sizes.begin(), sizes.end())) /
                         static_cast<double>(*std::min_element(sizes.begin(), sizes.end()));
    part.quotient = build_quotient(g, cell_of, part.k);
    part.cell_of = std::move(cell_of);
    return part;
}

CellPartition grow_cells(const Graph& g, std::uint32_t k, std::uint64_t seed) {
    const std::size_t n = g.node_count();
    if (k < 2 || k > n) {
        throw ArgumentError("grow_cells: k must be in [2, " + std::to_string(n) + "], got " + std::to_string(k));
    }
    Rng rng(seed);
    const auto start = static_cast<NodeId>(rng.uniform_below(n));

    // Farthest-point sampling; kUnreached compares greater than any distance,
    // so other components are seeded before a component is split further.
    std::vector<HopCount> nearest(n, kUnreached);
    auto farthest = [&](const std::vector<HopCount>& dist) {
        return static_cast<NodeId>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    };
    auto absorb = [&](NodeId src) {
        auto bfs = bfs_hops(g, src);
        for (NodeId v : bfs.order) {
            nearest[v] = std::min(nearest[v], bfs.dist[v]);
        }
    };

    std::vector<NodeId> seeds;
    seeds.reserve(k);
    {
        auto from_start = bfs_hops(g, start);
        seeds.push_back(farthest(from_start.dist));
    }
    absorb(seeds.back());
    while (seeds.size() < k) {
        seeds.push_back(farthest(nearest));
        absorb(seeds.back());
    }

    // Balanced growth: the smallest cell with a nonempty frontier claims its
    // next unassigned frontier node (ties: lower cell id).
    constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> cell(n, kNone);
    std::vector<std::vector<NodeId>> frontier(seeds.size());
    std::vector<std::size_t> cursor(seeds.size(), 0);
    using Entry = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> smallest;
    auto claim = [&](NodeId v, std::uint32_t c) {
        cell[v] = c;
        for (NodeId w : g.neighbors(v)) {
            if (cell[w] == kNone) {
                frontier[c].push_back(w);
            }
        }
    };
    for (std::uint32_t c = 0; c < seeds.size(); ++c) {
        claim(seeds[c], c);
        smallest.push({1, c});
    }
    while (!smallest.empty()) {
        const auto [size, c] = smallest.top();
        smallest.pop();
        auto& queue = frontier[c];
        while (cursor[c] < queue.size() && cell[queue[cursor[c]]] != kNone) {
            ++cursor[c];
        }
        if (cursor[c] == queue.size()) {
            continue;
        }
        claim(queue[cursor[c]++], c);
        smallest.push({size + 1, c});
    }

    // Components without a seed become extra cells.
    std::uint32_t next_label = static_cast<std::uint32_t>(seeds.size());
    for (NodeId root = 0; root < n; ++root) {
        if (cell[root] != kNone) {
            continue;
        }
        const auto bfs = bfs_hops(g, root);
        for (NodeId v : bfs.order) {
            cell[v] = next_label;
        }
        ++next_label;
    }
    return make_cell_partition(g, std::move(cell));
}

BaselineResult corridor_route(const Graph& g, NodeId s, NodeId t, const CellPartition& part) {
    return coarse_then_refine(g, s, t, part.cell_of, part.quotient);
}

BaselineResult louvain_route(const Graph& g, NodeId s, NodeId t, const CommunityPartition& part) {
    return coarse_then_refine(g, s, t, part.community_of, part.quotient);
}

}  // namespace sphere
