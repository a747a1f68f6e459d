#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sphere/graph.hpp"
#include "sphere/rng.hpp"

namespace sphere {

/// Radii of the source and target spheres. Compares lexicographically (rs, rt).
struct RadiusPair {
    int rs = 0;
    int rt = 0;

    friend auto operator<=>(const RadiusPair&, const RadiusPair&) = default;
};

/// Starting, decrement and anchor rules driving a partition cut.
///
/// - `staru` must return radii whose overlap is nonempty (at least
///   `eps_overlap` nodes) on the graph it is given.
/// - `decru` must never increase a coordinate and must be monotone in the
///   lexicographic order.
/// - `anru` must return an element of the candidate list, which is sorted.
struct RuleSet {
    std::function<RadiusPair(const Graph&, NodeId, NodeId)> staru;
    std::function<RadiusPair(RadiusPair)> decru;
    std::function<NodeId(std::span<const NodeId>, Rng&)> anru;

    /// Balanced start, larger-radius-first decrement by `delta_r`, uniform anchor.
    static RuleSet defaults(int delta_r = 1);
};

struct PartitionConfig {
    /// Leaves are emitted once their sphere radius is at most this many hops.
    int r_max = 1800;
    /// Optional caps on leaf size; a side exceeding either one is split further.
    std::optional<std::size_t> v_max;
    std::optional<std::size_t> e_max;
    /// Cuts stop at the last radius pair whose overlap has at least this many nodes.
    std::size_t eps_overlap = 1;
    int delta_r = 1;
    /// Maximum recursion depth; a side that would exceed it is emitted as a forced leaf.
    std::optional<int> l_max;
    /// Only single-anchor cuts are supported.
    int k_anchor = 1;
    std::uint64_t rng_seed = 0;

    /// Throws ArgumentError if any field is out of range.
    void validate() const;
};

struct CutResult {
    RadiusPair radii;
    std::vector<NodeId> overlap;  // ascending
    NodeId anchor = kInvalidNode;
    /// Number of decrement steps applied before the overlap dropped below eps.
    std::size_t steps = 0;
};

/// One independent subproblem: route `entry` -> `exit` inside `subgraph`.
/// Node ids (including the subgraph mapping) refer to the graph passed to
/// sph_partition.
struct TaskTriple {
    SubgraphView subgraph;
    NodeId entry = kInvalidNode;
    NodeId exit = kInvalidNode;
    /// Radius of the induced sphere `subgraph` was cut from.
    int radius = 0;
    int depth = 0;
    /// Emitted by a progress/depth guard rather than the radius/size test.
    bool forced = false;
};

/// (rs - delta_r, rt) if rs >= rt, else (rs, rt - delta_r); clamped at zero.
RadiusPair default_decru(RadiusPair p, int delta_r = 1);

/// (ceil(d/2), ceil(d/2)) for d the exact hop distance between s and t.
/// Throws DisconnectedError if t is unreachable.
RadiusPair default_staru(const Graph& g, NodeId s, NodeId t);

/// Uniform draw over the (sorted) candidate list. Throws ArgumentError when empty.
NodeId anchor_uniform(std::span<const NodeId> candidates, Rng& rng);

/// Shrinks the staru radii with decru until the overlap would fall below
/// eps_overlap and returns the last pair that met it, with an anchor in its
/// overlap.
///
/// Throws RuleViolationError if the starting pair is already below eps, if
/// decru increases a coordinate or makes no progress, or if anru returns a
/// node outside the overlap.
CutResult partition_cut(const Graph& g, NodeId s, NodeId t, const RuleSet& rules,
                        const PartitionConfig& cfg, Rng& rng);
CutResult partition_cut(const Graph& g, NodeId s, NodeId t, const RuleSet& rules,
                        const PartitionConfig& cfg);

/// Called for every cut executed by sph_partition, with the (sub)graph the
/// cut ran on and its local terminal ids.
using CutObserver = std::function<void(const Graph&, NodeId, NodeId, const CutResult&)>;

/// Recursive spherical partitioning. Returns leaf tasks in chain order: the
/// first entry is `s`, the last exit is `t`, and each exit equals the next
/// entry.
std::vector<TaskTriple> sph_partition(const Graph& g, NodeId s, NodeId t, const PartitionConfig& cfg,
                                      const RuleSet& rules, const CutObserver& observer = {});
std::vector<TaskTriple> sph_partition(const Graph& g, NodeId s, NodeId t, const PartitionConfig& cfg);

}  // namespace sphere
