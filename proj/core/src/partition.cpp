#include "sphere/partition.hpp"

#include <algorithm>
#include <string>

#include "sphere/error.hpp"
#include "sphere/search.hpp"
#include "sphere/spheres.hpp"

namespace sphere {

namespace {

std::string to_string(RadiusPair p) {
    return "(" + std::to_string(p.rs) + "," + std::to_string(p.rt) + ")";
}

NodeId root_of(std::span<const NodeId> to_root, NodeId local) {
    return to_root.empty() ? local : to_root[local];
}

class Splitter {
  public:
    Splitter(const PartitionConfig& cfg, const RuleSet& rules, const CutObserver& observer,
             std::vector<TaskTriple>& out)
        : cfg_(cfg), rules_(rules), observer_(observer), out_(out) {}

    /// Cuts (h, u, w) and emits or recurses on both sides. `to_root` maps ids
    /// of `h` to the caller's graph (empty for the top level). `hops` is the
    /// u-w hop distance in `h` when already known.
    void split(const Graph& h, std::span<const NodeId> to_root, NodeId u, NodeId w, int depth,
               std::uint64_t seed, std::optional<HopCount> hops) {
        Rng rng(seed);
        const CutResult cut = partition_cut(h, u, w, rules_, cfg_, rng);
        if (observer_) {
            observer_(h, u, w, cut);
        }
        const NodeId anchor = cut.anchor;
        for (int side = 0; side < 2; ++side) {
            const bool source_side = side == 0;
            const NodeId center = source_side ? u : w;
            const int radius = source_side ? cut.radii.rs : cut.radii.rt;
            const NodeId entry = source_side ? u : anchor;
            const NodeId exit = source_side ? anchor : w;

            SubgraphView view = induced_sphere(h, center, radius);
            if (!to_root.empty()) {
                view = std::move(view).lifted(to_root);
            }
            const NodeId root_entry = root_of(to_root, entry);
            const NodeId root_exit = root_of(to_root, exit);

            if (!needs_split(view, radius)) {
                emit(std::move(view), root_entry, root_exit, radius, depth, false);
                continue;
            }
            if ((cfg_.l_max && depth + 1 > *cfg_.l_max) || anchor == u || anchor == w) {
                emit(std::move(view), root_entry, root_exit, radius, depth, true);
                continue;
            }
            const NodeId child_entry = *view.from_parent(root_entry);
            const NodeId child_exit = *view.from_parent(root_exit);
            const HopCount child_hops = hop_distance(view.graph(), child_entry, child_exit);
            if (!hops) {
                hops = hop_distance(h, u, w);
            }
            if (child_hops <= 2 || child_hops >= *hops) {
                emit(std::move(view), root_entry, root_exit, radius, depth, true);
                continue;
            }
            split(view.graph(), view.parent_ids(), child_entry, child_exit, depth + 1,
                  derive_seed(seed, static_cast<std::uint64_t>(depth + 1), static_cast<std::uint64_t>(side)),
                  child_hops);
        }
    }

  private:
    bool needs_split(const SubgraphView& view, int radius) const {
        return radius > cfg_.r_max || (cfg_.v_max && view.node_count() > *cfg_.v_max) ||
               (cfg_.e_max && view.edge_count() > *cfg_.e_max);
    }

    void emit(SubgraphView view, NodeId entry, NodeId exit, int radius, int depth, bool forced) {
        out_.push_back(TaskTriple{std::move(view), entry, exit, radius, depth, forced});
    }

    const PartitionConfig& cfg_;
    const RuleSet& rules_;
    const CutObserver& observer_;
    std::vector<TaskTriple>& out_;
};

}  // namespace

void PartitionConfig::validate() const {
    if (r_max < 1) {
        throw ArgumentError("r_max must be >= 1");
    }
    if (eps_overlap < 1) {
        throw ArgumentError("eps_overlap must be >= 1");
    }
    if (delta_r < 1) {
        throw ArgumentError("delta_r must be >= 1");
    }
    if (l_max && *l_max < 0) {
        throw ArgumentError("l_max must be >= 0");
    }
    if ((v_max && *v_max < 1) || (e_max && *e_max < 1)) {
        throw ArgumentError("v_max/e_max must be >= 1 when set");
    }
    if (k_anchor != 1) {
        throw ArgumentError("only k_anchor = 1 is supported");
    }
}

RuleSet RuleSet::defaults(int delta_r) {
    RuleSet rules;
    rules.staru = [](const Graph& g, NodeId s, NodeId t) { return default_staru(g, s, t); };
    rules.decru = [delta_r](RadiusPair p) { return default_decru(p, delta_r); };
    rules.anru = [](std::span<const NodeId> candidates, Rng& rng) { return anchor_uniform(candidates, rng); };
    return rules;
}

RadiusPair default_decru(RadiusPair p, int delta_r) {
    if (p.rs >= p.rt) {
        p.rs = std::max(0, p.rs - delta_r);
    } else {
        p.rt = std::max(0, p.rt - delta_r);
    }
    return p;
}

RadiusPair default_staru(const Graph& g, NodeId s, NodeId t) {
    const auto d = static_cast<int>(hop_distance(g, s, t));
    const int half = (d + 1) / 2;
    return {half, half};
}

NodeId anchor_uniform(std::span<const NodeId> candidates, Rng& rng) {
    if (candidates.empty()) {
        throw ArgumentError("anchor_uniform: empty candidate set");
    }
    return candidates[rng.uniform_below(candidates.size())];
}

CutResult partition_cut(const Graph& g, NodeId s, NodeId t, const RuleSet& rules,
                        const PartitionConfig& cfg, Rng& rng) {
    if (!g.contains(s) || !g.contains(t)) {
        throw ArgumentError("partition_cut: terminal out of range");
    }
    if (s == t) {
        throw ArgumentError("partition_cut: terminals must differ");
    }
    const RadiusPair start = rules.staru(g, s, t);
    if (start.rs < 0 || start.rt < 0) {
        throw RuleViolationError("staru returned negative radii " + to_string(start));
    }
    const OverlapOracle oracle(g, s, t, start.rs, start.rt);
    if (oracle.size(start.rs, start.rt) < cfg.eps_overlap) {
        throw RuleViolationError("staru radii " + to_string(start) + " give an overlap smaller than " +
                                 std::to_string(cfg.eps_overlap));
    }

    CutResult result;
    RadiusPair current = start;
    for (;;) {
        const RadiusPair next = rules.decru(current);
        if (next.rs < 0 || next.rt < 0 || next.rs > current.rs || next.rt > current.rt) {
            throw RuleViolationError("decru increased a coordinate: " + to_string(current) + " -> " +
                                     to_string(next));
        }
        if (next == current) {
            throw RuleViolationError("decru stalled at " + to_string(current));
        }
        if (oracle.size(next.rs, next.rt) < cfg.eps_overlap) {
            break;
        }
        current = next;
        ++result.steps;
    }

    result.radii = current;
    result.overlap = oracle.members(current.rs, current.rt);
    result.anchor = rules.anru(result.overlap, rng);
    if (!std::binary_search(result.overlap.begin(), result.overlap.end(), result.anchor)) {
        throw RuleViolationError("anru returned node " + std::to_string(result.anchor) +
                                 " outside the overlap");
    }
    return result;
}

CutResult partition_cut(const Graph& g, NodeId s, NodeId t, const RuleSet& rules,
                        const PartitionConfig& cfg) {
    Rng rng(cfg.rng_seed);
    return partition_cut(g, s, t, rules, cfg, rng);
}

std::vector<TaskTriple> sph_partition(const Graph& g, NodeId s, NodeId t, const PartitionConfig& cfg,
                                      const RuleSet& rules, const CutObserver& observer) {
    cfg.validate();
    std::vector<TaskTriple> tasks;
    Splitter(cfg, rules, observer, tasks).split(g, {}, s, t, 0, cfg.rng_seed, std::nullopt);
    return tasks;
}

std::vector<TaskTriple> sph_partition(const Graph& g, NodeId s, NodeId t, const PartitionConfig& cfg) {
    return sph_partition(g, s, t, cfg, RuleSet::defaults(cfg.delta_r));
}

}  // namespace sphere
