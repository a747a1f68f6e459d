#include <algorithm>
#include <numeric>

#include "sphere/baselines.hpp"
#include "sphere/error.hpp"
#include "sphere/rng.hpp"

namespace sphere {

namespace {

constexpr double kLevelGainThreshold = 1e-7;

// Weighted graph with self-loops, as produced by community aggregation.
// Adjacency excludes the self-loop; `self[i]` is the total weight of edges
// folded into node i, and contributes 2*self[i] to its degree.
struct Level {
    std::vector<std::uint64_t> offsets;
    std::vector<std::uint32_t> targets;
    std::vector<double> weights;
    std::vector<double> self;

    std::size_t size() const { return self.size(); }

    double degree(std::uint32_t i) const {
        double k = 2.0 * self[i];
        for (auto e = offsets[i]; e < offsets[i + 1]; ++e) {
            k += weights[e];
        }
        return k;
    }
};

Level level_from_graph(const Graph& g) {
    Level level;
    level.offsets = g.offsets();
    level.targets.assign(g.targets().begin(), g.targets().end());
    level.weights = g.arc_weights();
    level.self.assign(g.node_count(), 0.0);
    return level;
}

double level_modularity(const Level& level, std::span<const std::uint32_t> label, std::uint32_t count,
                        double resolution) {
    std::vector<double> inside(count, 0.0);
    std::vector<double> total(count, 0.0);
    double m2 = 0.0;
    for (std::uint32_t i = 0; i < level.size(); ++i) {
        const double k = level.degree(i);
        m2 += k;
        total[label[i]] += k;
        inside[label[i]] += 2.0 * level.self[i];
        for (auto e = level.offsets[i]; e < level.offsets[i + 1]; ++e) {
            if (label[level.targets[e]] == label[i]) {
                inside[label[i]] += level.weights[e];
            }
        }
    }
    if (m2 <= 0.0) {
        return 0.0;
    }
    double q = 0.0;
    for (std::uint32_t c = 0; c < count; ++c) {
        q += inside[c] / m2 - resolution * (total[c] / m2) * (total[c] / m2);
    }
    return q;
}

/// Local-moving phase. Returns dense labels (numbered by first occurrence in
/// node order) and their count.
std::uint32_t move_nodes(const Level& level, Rng& rng, double resolution, std::vector<std::uint32_t>& label) {
    const auto n = static_cast<std::uint32_t>(level.size());
    std::vector<double> degree(n);
    double m2 = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
        degree[i] = level.degree(i);
        m2 += degree[i];
    }
    label.resize(n);
    std::iota(label.begin(), label.end(), 0u);
    if (m2 <= 0.0) {
        return n;
    }
    std::vector<double> total = degree;

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    for (std::uint32_t i = n; i > 1; --i) {
        std::swap(order[i - 1], order[rng.uniform_below(i)]);
    }

    std::vector<double> link(n, 0.0);
    std::vector<std::uint32_t> touched;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::uint32_t i : order) {
            const std::uint32_t current = label[i];
            touched.clear();
            for (auto e = level.offsets[i]; e < level.offsets[i + 1]; ++e) {
                const std::uint32_t c = label[level.targets[e]];
                if (link[c] == 0.0) {
                    touched.push_back(c);
                }
                link[c] += level.weights[e];
            }
            total[current] -= degree[i];

            const double scale = resolution * degree[i] / m2;
            std::uint32_t best = current;
            double best_gain = link[current] - scale * total[current];
            const double tolerance = 1e-12 * degree[i];
            for (std::uint32_t c : touched) {
                const double gain = link[c] - scale * total[c];
                if (gain > best_gain + tolerance) {
                    best = c;
                    best_gain = gain;
                }
            }
            total[best] += degree[i];
            if (best != current) {
                label[i] = best;
                moved = true;
            }
            for (std::uint32_t c : touched) {
                link[c] = 0.0;
            }
        }
    }

    std::vector<std::uint32_t> remap(n, static_cast<std::uint32_t>(-1));
    std::uint32_t count = 0;
    for (auto& c : label) {
        if (remap[c] == static_cast<std::uint32_t>(-1)) {
            remap[c] = count++;
        }
        c = remap[c];
    }
    return count;
}

Level aggregate(const Level& level, std::span<const std::uint32_t> label, std::uint32_t count) {
    Level next;
    next.self.assign(count, 0.0);
    std::vector<std::vector<std::pair<std::uint32_t, double>>> rows(count);
    for (std::uint32_t i = 0; i < level.size(); ++i) {
        const std::uint32_t ci = label[i];
        next.self[ci] += level.self[i];
        for (auto e = level.offsets[i]; e < level.offsets[i + 1]; ++e) {
            const std::uint32_t cj = label[level.targets[e]];
            if (ci == cj) {
                next.self[ci] += 0.5 * level.weights[e];  // each internal edge is seen from both ends
            } else {
                rows[ci].emplace_back(cj, level.weights[e]);
            }
        }
    }
    next.offsets.assign(count + 1, 0);
    for (std::uint32_t c = 0; c < count; ++c) {
        auto& row = rows[c];
        std::sort(row.begin(), row.end());
        for (std::size_t i = 0; i < row.size();) {
            std::size_t j = i;
            double w = 0.0;
            for (; j < row.size() && row[j].first == row[i].first; ++j) {
                w += row[j].second;
            }
            next.targets.push_back(row[i].first);
            next.weights.push_back(w);
            i = j;
        }
        next.offsets[c + 1] = next.targets.size();
    }
    return next;
}

}  // namespace

double modularity(const Graph& g, std::span<const std::uint32_t> community_of, double resolution) {
    if (community_of.size() != g.node_count()) {
        throw ArgumentError("modularity: labelling size does not match graph");
    }
    const std::uint32_t count =
        community_of.empty() ? 0 : *std::max_element(community_of.begin(), community_of.end()) + 1;
    return level_modularity(level_from_graph(g), community_of, count, resolution);
}

CommunityPartition louvain(const Graph& g, std::uint64_t seed) {
    constexpr double kResolution = 1.0;
    Rng rng(seed);
    Level level = level_from_graph(g);

    CommunityPartition part;
    part.community_of.resize(g.node_count());
    std::iota(part.community_of.begin(), part.community_of.end(), 0u);
    part.count = static_cast<std::uint32_t>(g.node_count());
    double previous = level_modularity(level, part.community_of, part.count, kResolution);

    std::vector<std::uint32_t> label;
    for (;;) {
        const std::uint32_t count = move_nodes(level, rng, kResolution, label);
        if (count == level.size()) {
            break;  // no node changed community
        }
        const double q = level_modularity(level, label, count, kResolution);
        for (auto& c : part.community_of) {
            c = label[c];
        }
        part.count = count;
        part.level_modularity.push_back(q);
        const double gain = q - previous;
        previous = q;
        if (gain < kLevelGainThreshold) {
            break;
        }
        level = aggregate(level, label, count);
    }

    part.modularity = modularity(g, part.community_of, kResolution);
    part.quotient = Graph::from_edges(part.count, [&] {
        std::vector<Edge> crossing;
        for (const auto& e : g.edges()) {
            if (part.community_of[e.u] != part.community_of[e.v]) {
                crossing.push_back({part.community_of[e.u], part.community_of[e.v], e.weight});
            }
        }
        return crossing;
    }());
    return part;
}

}  // namespace sphere
