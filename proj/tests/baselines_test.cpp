#include <gtest/gtest.h>

#include <map>
#include <set>

#include "sphere/baselines.hpp"
#include "sphere/error.hpp"
#include "sphere/rng.hpp"
#include "sphere/synthetic.hpp"
#include "support/oracles.hpp"

namespace sphere {
namespace {

std::map<std::uint32_t, std::vector<NodeId>> members(const std::vector<std::uint32_t>& label) {
    std::map<std::uint32_t, std::vector<NodeId>> out;
    for (NodeId v = 0; v < label.size(); ++v) {
        out[label[v]].push_back(v);
    }
    return out;
}

bool all_blocks_connected(const Graph& g, const std::vector<std::uint32_t>& label) {
    for (const auto& [c, nodes] : members(label)) {
        if (!is_connected(induced_subgraph(g, nodes).graph())) {
            return false;
        }
    }
    return true;
}

// Two 4-cliques {0..3} and {4..7} joined by the bridge 3-4.
Graph two_cliques() {
    std::vector<Edge> edges;
    for (NodeId base : {0U, 4U}) {
        for (NodeId a = 0; a < 4; ++a) {
            for (NodeId b = a + 1; b < 4; ++b) {
                edges.push_back({base + a, base + b, 1.0});
            }
        }
    }
    edges.push_back({3, 4, 1.0});
    return Graph::from_edges(8, edges);
}

TEST(FullDijkstra, Examples) {
    const std::vector<Edge> tri = {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 3.0}};
    EXPECT_EQ(dijkstra_full(Graph::from_edges(3, tri), 0, 2).cost, 2.0);
    EXPECT_EQ(dijkstra_full(synthetic::path_graph(5), 0, 4).cost, 4.0);
}

TEST(Cells, PathSplitsInHalves) {
    const Graph g = synthetic::path_graph(8);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const CellPartition part = grow_cells(g, 2, seed);
        EXPECT_EQ(part.k, 2U);
        const auto cells = members(part.cell_of);
        ASSERT_EQ(cells.size(), 2U);
        for (const auto& [c, nodes] : cells) {
            EXPECT_GE(nodes.size(), 3U);
            EXPECT_LE(nodes.size(), 5U);
        }
        EXPECT_TRUE(all_blocks_connected(g, part.cell_of));
        EXPECT_EQ(part.quotient.node_count(), 2U);
        EXPECT_EQ(part.quotient.edge_count(), 1U);
    }
}

TEST(Cells, OneCellPerNode) {
    const Graph g = synthetic::random_connected_graph(20, 25, 4);
    const CellPartition part = grow_cells(g, 20, 1);
    EXPECT_EQ(members(part.cell_of).size(), 20U);
    EXPECT_EQ(part.quotient.edge_count(), g.edge_count());
    for (const auto& e : g.edges()) {
        EXPECT_EQ(part.quotient.edge_weight(part.cell_of[e.u], part.cell_of[e.v]), e.weight);
    }
}

TEST(Cells, GridCellsConnectedAndBalanced) {
    const Graph g = synthetic::grid_graph(8, 8);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const CellPartition part = grow_cells(g, 4, seed);
        const auto cells = members(part.cell_of);
        ASSERT_EQ(cells.size(), 4U);
        for (const auto& [c, nodes] : cells) {
            EXPECT_GE(nodes.size(), 12U) << "seed " << seed;
            EXPECT_LE(nodes.size(), 20U) << "seed " << seed;
        }
        EXPECT_TRUE(all_blocks_connected(g, part.cell_of));
    }
}

TEST(Cells, RejectsBadK) {
    const Graph g = synthetic::path_graph(5);
    EXPECT_THROW(grow_cells(g, 1, 0), ArgumentError);
    EXPECT_THROW(grow_cells(g, 6, 0), ArgumentError);
}

TEST(Cells, QuotientUsesMinimumCrossingWeight) {
    const std::vector<Edge> edges = {{0, 2, 5.0}, {1, 3, 2.0}, {0, 1, 1.0}, {2, 3, 1.0}};
    const Graph g = Graph::from_edges(4, edges);
    const CellPartition part = make_cell_partition(g, {0, 0, 1, 1});
    EXPECT_EQ(part.quotient.edge_weight(0, 1), 2.0);
    EXPECT_EQ(part.balance_ratio, 1.0);
    EXPECT_THROW(make_cell_partition(g, {0, 0, 2, 2}), ArgumentError);
}

TEST(Corridor, SameCellStaysInside) {
    const Graph g = synthetic::grid_graph(10, 10, 1.0, 10.0, 7);
    const CellPartition part = grow_cells(g, 8, 3);
    for (NodeId s = 0; s < 100; s += 7) {
        for (NodeId t = 0; t < 100; t += 11) {
            if (part.cell_of[s] != part.cell_of[t]) {
                continue;
            }
            const BaselineResult r = corridor_route(g, s, t, part);
            EXPECT_GE(r.path.cost, dijkstra_full(g, s, t).cost);
            EXPECT_EQ(check_path(g, r.path.nodes, s, t, r.path.cost), std::nullopt);
            EXPECT_EQ(r.stats.coarse_hops, 0U);
        }
    }
}

TEST(Corridor, PathTwoCellsIsExact) {
    const Graph g = synthetic::path_graph(8);
    const BaselineResult r = corridor_route(g, 0, 7, grow_cells(g, 2, 0));
    EXPECT_EQ(r.path.cost, 7.0);
    EXPECT_EQ(r.stats.corridor_nodes, 8U);
}

// s reaches t through cell 1 (cheap crossings, costly interior) or through
// cell 2 (the optimum). The quotient prefers cell 1 and severs the optimum.
TEST(Corridor, PlantedBottleneckLosesOptimality) {
    enum : NodeId { s, x1, x2, y, t };
    const std::vector<Edge> edges = {{s, x1, 1.0}, {x1, x2, 100.0}, {x2, t, 1.0}, {s, y, 5.0}, {y, t, 5.0}};
    const Graph g = Graph::from_edges(5, edges);
    const CellPartition part = make_cell_partition(g, {0, 1, 1, 2, 3});
    const BaselineResult r = corridor_route(g, s, t, part);
    EXPECT_EQ(dijkstra_full(g, s, t).cost, 10.0);
    EXPECT_EQ(r.path.cost, 102.0);
    EXPECT_FALSE(r.stats.fallback);
    EXPECT_EQ(check_path(g, r.path.nodes, s, t, r.path.cost), std::nullopt);
}

TEST(Corridor, WidensWhenCorridorIsDisconnected) {
    // Cell 1 = {1, 3} is disconnected inside; its quotient edges still exist.
    const std::vector<Edge> edges = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}};
    const Graph g = Graph::from_edges(5, edges);
    const CellPartition part = make_cell_partition(g, {0, 1, 2, 1, 3});
    const BaselineResult r = corridor_route(g, 0, 4, part);
    EXPECT_EQ(r.path.cost, 4.0);
    EXPECT_TRUE(r.stats.widened);
}

TEST(Modularity, MatchesTextbookFormula) {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = synthetic::random_connected_graph(15, 20, rng.next());
        std::vector<std::uint32_t> label(15);
        for (auto& l : label) {
            l = static_cast<std::uint32_t>(rng.uniform_below(4));
        }
        EXPECT_NEAR(modularity(g, label), oracle::modularity(g, label), 1e-12);
    }
}

TEST(Louvain, TwoCliquesMatchExhaustiveOptimum) {
    const Graph g = two_cliques();
    EXPECT_EQ(oracle::bell(8), 4140U);
    const auto [best_label, best_q] = oracle::best_partition(g);
    const std::set<std::set<NodeId>> cliques = {{0, 1, 2, 3}, {4, 5, 6, 7}};
    EXPECT_EQ(oracle::blocks(best_label), cliques);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const CommunityPartition part = louvain(g, seed);
        EXPECT_EQ(oracle::blocks(part.community_of), cliques) << "seed " << seed;
        EXPECT_NEAR(part.modularity, best_q, 1e-12);
    }
}

TEST(Louvain, SingleEdge) {
    const Graph g = synthetic::path_graph(2);
    const CommunityPartition part = louvain(g, 0);
    EXPECT_GE(part.count, 1U);
    EXPECT_LE(part.count, 2U);
    EXPECT_NEAR(part.modularity, oracle::modularity(g, part.community_of), 1e-12);
}

TEST(Louvain, GridCommunitiesConnectedAndConsistent) {
    const Graph g = synthetic::grid_graph(8, 8);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const CommunityPartition part = louvain(g, seed);
        EXPECT_TRUE(all_blocks_connected(g, part.community_of));
        EXPECT_NEAR(part.modularity, oracle::modularity(g, part.community_of), 1e-9);
        ASSERT_FALSE(part.level_modularity.empty());
        for (std::size_t i = 1; i < part.level_modularity.size(); ++i) {
            EXPECT_GE(part.level_modularity[i], part.level_modularity[i - 1] - 1e-12);
        }
        EXPECT_NEAR(part.level_modularity.back(), part.modularity, 1e-9);
        EXPECT_EQ(part.quotient.node_count(), part.count);
    }
}

TEST(Louvain, WeightedGridIsDeterministicPerSeed) {
    const Graph g = synthetic::grid_graph(20, 20, 1.0, 10.0, 3);
    const auto a = louvain(g, 7);
    const auto b = louvain(g, 7);
    EXPECT_EQ(a.community_of, b.community_of);
    EXPECT_EQ(a.modularity, b.modularity);
    EXPECT_GT(a.modularity, 0.5);
}

TEST(LouvainRoute, ThroughTheBridge) {
    const Graph g = two_cliques();
    const CommunityPartition part = louvain(g, 1);
    for (NodeId s = 0; s < 4; ++s) {
        for (NodeId t = 4; t < 8; ++t) {
            const BaselineResult r = louvain_route(g, s, t, part);
            EXPECT_EQ(r.path.cost, dijkstra_full(g, s, t).cost);
            EXPECT_NE(std::find(r.path.nodes.begin(), r.path.nodes.end(), 3U), r.path.nodes.end());
        }
    }
}

TEST(LouvainRoute, SameCommunityStaysInside) {
    const Graph g = synthetic::grid_graph(12, 12, 1.0, 10.0, 9);
    const CommunityPartition part = louvain(g, 2);
    for (NodeId s = 0; s < 144; s += 13) {
        for (NodeId t = 0; t < 144; t += 7) {
            if (s == t || part.community_of[s] != part.community_of[t]) {
                continue;
            }
            const BaselineResult r = louvain_route(g, s, t, part);
            EXPECT_GE(r.path.cost, dijkstra_full(g, s, t).cost);
            if (!r.stats.widened && !r.stats.fallback) {
                for (NodeId v : r.path.nodes) {
                    EXPECT_EQ(part.community_of[v], part.community_of[s]);
                }
            }
        }
    }
}

TEST(LouvainRoute, NeverBelowOracle) {
    const Graph g = synthetic::grid_graph(20, 20, 1.0, 10.0, 4);
    const CommunityPartition part = louvain(g, 3);
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const auto s = static_cast<NodeId>(rng.uniform_below(400));
        const auto t = static_cast<NodeId>(rng.uniform_below(400));
        const BaselineResult r = louvain_route(g, s, t, part);
        EXPECT_GE(r.path.cost, dijkstra_full(g, s, t).cost);
        EXPECT_EQ(check_path(g, r.path.nodes, s, t, r.path.cost), std::nullopt);
    }
}

}  // namespace
}  // namespace sphere
