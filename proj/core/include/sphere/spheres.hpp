#pragma once

#include <span>
#include <vector>

#include "sphere/graph.hpp"
#include "sphere/search.hpp"

namespace sphere {

/// Closed hop sphere: every node within `radius` hops of `center`.
struct SphereSet {
    NodeId center = kInvalidNode;
    int radius = 0;
    std::vector<NodeId> members;    // ascending ids
    std::vector<HopCount> dist;     // parallel to members
    std::vector<bool> membership;   // bitmap keyed to the parent graph

    bool contains(NodeId v) const { return v < membership.size() && membership[v]; }
    std::size_t size() const noexcept { return members.size(); }
};

/// Throws ArgumentError on an invalid center or negative radius.
SphereSet hop_sphere(const Graph& g, NodeId center, int radius);

/// Sphere nodes plus the BFS-tree edge to the parent of every non-center
/// member: one shortest hop path from each member to the center.
SubgraphView spherical_subgraph(const Graph& g, NodeId center, int radius);

/// Sphere nodes plus every edge of `g` between them.
SubgraphView induced_sphere(const Graph& g, NodeId center, int radius);

/// Members of both spheres, ascending.
std::vector<NodeId> overlap(const Graph& g, NodeId s, NodeId t, int rs, int rt);

/// Overlap queries for a fixed (s, t) under shrinking radii.
///
/// Runs one capped BFS from each endpoint up to the given maximum radii;
/// overlaps for any radii within those caps are then answered by scanning the
/// smaller capped ball without further searches.
class OverlapOracle {
  public:
    OverlapOracle(const Graph& g, NodeId s, NodeId t, int max_rs, int max_rt);

    int max_rs() const noexcept { return max_rs_; }
    int max_rt() const noexcept { return max_rt_; }

    std::size_t size(int rs, int rt) const;
    std::vector<NodeId> members(int rs, int rt) const;

  private:
    template <typename Fn>
    void for_each(int rs, int rt, Fn&& fn) const;

    int max_rs_;
    int max_rt_;
    HopDistances from_s_;
    HopDistances from_t_;
};

}  // namespace sphere
