#include "sphere/spheres.hpp"

#include <algorithm>
#include <numeric>

#include "sphere/error.hpp"

namespace sphere {

namespace {

void check_args(const Graph& g, NodeId center, int radius) {
    if (!g.contains(center)) {
        throw ArgumentError("sphere center " + std::to_string(center) + " out of range");
    }
    if (radius < 0) {
        throw ArgumentError("sphere radius must be nonnegative, got " + std::to_string(radius));
    }
}

HopCount checked_radius(int radius) {
    if (radius < 0) {
        throw ArgumentError("overlap radii must be nonnegative");
    }
    return static_cast<HopCount>(radius);
}

}  // namespace

SphereSet hop_sphere(const Graph& g, NodeId center, int radius) {
    check_args(g, center, radius);
    auto bfs = bfs_hops(g, center, static_cast<HopCount>(radius));
    SphereSet out;
    out.center = center;
    out.radius = radius;
    out.members = bfs.order;
    std::sort(out.members.begin(), out.members.end());
    out.dist.reserve(out.members.size());
    out.membership.assign(g.node_count(), false);
    for (NodeId v : out.members) {
        out.dist.push_back(bfs.dist[v]);
        out.membership[v] = true;
    }
    return out;
}

SubgraphView spherical_subgraph(const Graph& g, NodeId center, int radius) {
    check_args(g, center, radius);
    auto bfs = bfs_hops(g, center, static_cast<HopCount>(radius));
    std::vector<NodeId> members = bfs.order;
    std::sort(members.begin(), members.end());
    std::vector<Edge> tree;
    tree.reserve(members.size());
    auto local_of = [&](NodeId v) {
        return static_cast<NodeId>(std::lower_bound(members.begin(), members.end(), v) - members.begin());
    };
    for (NodeId v : members) {
        if (v != center) {
            const NodeId p = bfs.parent[v];
            tree.push_back({local_of(v), local_of(p), *g.edge_weight(v, p)});
        }
    }
    Graph sub = Graph::from_edges(members.size(), tree);
    return SubgraphView(std::move(sub), std::move(members));
}

SubgraphView induced_sphere(const Graph& g, NodeId center, int radius) {
    check_args(g, center, radius);
    auto bfs = bfs_hops(g, center, static_cast<HopCount>(radius));
    return induced_subgraph(g, bfs.order);
}

std::vector<NodeId> overlap(const Graph& g, NodeId s, NodeId t, int rs, int rt) {
    check_args(g, s, rs);
    check_args(g, t, rt);
    return OverlapOracle(g, s, t, rs, rt).members(rs, rt);
}

OverlapOracle::OverlapOracle(const Graph& g, NodeId s, NodeId t, int max_rs, int max_rt)
    : max_rs_(max_rs),
      max_rt_(max_rt),
      from_s_(bfs_hops(g, s, checked_radius(max_rs))),
      from_t_(bfs_hops(g, t, checked_radius(max_rt))) {}

template <typename Fn>
void OverlapOracle::for_each(int rs, int rt, Fn&& fn) const {
    if (rs < 0 || rt < 0 || rs > max_rs_ || rt > max_rt_) {
        throw ArgumentError("overlap radii (" + std::to_string(rs) + "," + std::to_string(rt) +
                            ") outside the precomputed range");
    }
    // Scan the smaller ball in BFS order (nondecreasing distance) and test
    // membership in the other one by its distance array.
    const bool scan_s = from_s_.order.size() <= from_t_.order.size();
    const auto& scan = scan_s ? from_s_ : from_t_;
    const auto& probe = scan_s ? from_t_ : from_s_;
    const auto scan_radius = static_cast<HopCount>(scan_s ? rs : rt);
    const auto probe_radius = static_cast<HopCount>(scan_s ? rt : rs);
    for (NodeId v : scan.order) {
        if (scan.dist[v] > scan_radius) {
            break;
        }
        if (probe.dist[v] <= probe_radius) {
            fn(v);
        }
    }
}

std::size_t OverlapOracle::size(int rs, int rt) const {
    std::size_t count = 0;
    for_each(rs, rt, [&](NodeId) { ++count; });
    return count;
}

std::vector<NodeId> OverlapOracle::members(int rs, int rt) const {
    std::vector<NodeId> out;
    for_each(rs, rt, [&](NodeId v) { out.push_back(v); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sphere
