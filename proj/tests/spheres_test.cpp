#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "sphere/error.hpp"
#include "sphere/rng.hpp"
#include "sphere/spheres.hpp"
#include "sphere/synthetic.hpp"
#include "support/oracles.hpp"

namespace sphere {
namespace {

using synthetic::Figure2;
using EdgeSet = std::set<std::pair<NodeId, NodeId>>;

EdgeSet parent_edges(const SubgraphView& view) {
    EdgeSet out;
    for (const auto& e : view.graph().edges()) {
        const NodeId a = view.to_parent(e.u);
        const NodeId b = view.to_parent(e.v);
        out.insert({std::min(a, b), std::max(a, b)});
    }
    return out;
}

// Star center 0 with leaves 1, 2, 3, plus chords 1-2 and 3-2.
Graph figure_one() {
    const std::vector<Edge> edges = {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {1, 2, 1.0}, {3, 2, 1.0}};
    return Graph::from_edges(4, edges);
}

TEST(HopSphere, FigureTwoRadiusTwo) {
    const SphereSet ball = hop_sphere(Figure2::graph(), Figure2::s, 2);
    const std::vector<NodeId> expected = {Figure2::s, Figure2::u2, Figure2::u3, Figure2::a, Figure2::a_prime};
    EXPECT_EQ(ball.members, expected);
    EXPECT_TRUE(ball.contains(Figure2::a_prime));
    EXPECT_FALSE(ball.contains(Figure2::u5));
}

TEST(HopSphere, ZeroRadius) {
    const Graph g = synthetic::random_connected_graph(15, 10, 1);
    EXPECT_EQ(hop_sphere(g, 4, 0).members, std::vector<NodeId>{4});
}

TEST(HopSphere, RadiusBeyondEccentricity) {
    EXPECT_EQ(hop_sphere(synthetic::path_graph(5), 2, 10).size(), 5U);
}

TEST(HopSphere, NegativeRadiusRejected) {
    EXPECT_THROW(hop_sphere(synthetic::path_graph(3), 0, -1), ArgumentError);
    EXPECT_THROW(OverlapOracle(synthetic::path_graph(3), 0, 2, -1, 1), ArgumentError);
}

TEST(HopSphere, MonotoneInRadiusAndMatchesFloyd) {
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = synthetic::random_connected_graph(30, 25, rng.next());
        const auto hops = oracle::all_pairs_hops(g);
        const auto v = static_cast<NodeId>(rng.uniform_below(30));
        std::size_t previous = 0;
        for (int r = 0; r <= 8; ++r) {
            const SphereSet ball = hop_sphere(g, v, r);
            std::vector<NodeId> expected;
            for (NodeId x = 0; x < 30; ++x) {
                if (hops[v][x] <= r) {
                    expected.push_back(x);
                }
            }
            EXPECT_EQ(ball.members, expected);
            EXPECT_GE(ball.size(), previous);
            previous = ball.size();
        }
    }
}

TEST(SphericalSubgraph, FigureOneKeepsShortestPathEdges) {
    const SubgraphView view = spherical_subgraph(figure_one(), 0, 1);
    EXPECT_EQ(parent_edges(view), (EdgeSet{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(SphericalSubgraph, ZeroRadiusIsSingleNode) {
    const SubgraphView view = spherical_subgraph(figure_one(), 2, 0);
    EXPECT_EQ(view.node_count(), 1U);
    EXPECT_EQ(view.edge_count(), 0U);
}

TEST(SphericalSubgraph, EqualsInducedOnPaths) {
    const Graph g = synthetic::path_graph(12);
    for (NodeId v = 0; v < 12; ++v) {
        for (int r = 0; r < 7; ++r) {
            EXPECT_EQ(parent_edges(spherical_subgraph(g, v, r)), parent_edges(induced_sphere(g, v, r)));
        }
    }
}

TEST(SphericalSubgraph, IsSpanningTreeOfBall) {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = synthetic::random_connected_graph(40, 60, rng.next());
        const auto hops = oracle::all_pairs_hops(g);
        const auto v = static_cast<NodeId>(rng.uniform_below(40));
        const int r = static_cast<int>(rng.uniform_below(4));
        const SubgraphView view = spherical_subgraph(g, v, r);
        EXPECT_EQ(view.edge_count() + 1, view.node_count());
        EXPECT_TRUE(is_connected(view.graph()));
        for (const auto& [a, b] : parent_edges(view)) {
            EXPECT_EQ(std::abs(hops[v][a] - hops[v][b]), 1);
        }
    }
}

TEST(InducedSphere, FigureOneKeepsAllEdges) {
    const SubgraphView view = induced_sphere(figure_one(), 0, 1);
    EXPECT_EQ(parent_edges(view), (EdgeSet{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}));
}

TEST(InducedSphere, FigureTwoAroundTarget) {
    const SubgraphView view = induced_sphere(Figure2::graph(), Figure2::t, 2);
    const std::vector<NodeId> nodes(view.parent_ids().begin(), view.parent_ids().end());
    const std::vector<NodeId> expected_nodes = {Figure2::a, Figure2::a_prime, Figure2::u5, Figure2::u6, Figure2::t};
    EXPECT_EQ(nodes, expected_nodes);
    const EdgeSet expected = {{Figure2::u5, Figure2::t},
                              {Figure2::u6, Figure2::t},
                              {Figure2::u5, Figure2::u6},
                              {Figure2::a, Figure2::u5},
                              {Figure2::a_prime, Figure2::u5}};
    EXPECT_EQ(parent_edges(view), expected);
}

TEST(InducedSphere, LargeRadiusIsWholeGraph) {
    const Graph g = synthetic::random_connected_graph(20, 15, 6);
    const SubgraphView view = induced_sphere(g, 3, 100);
    EXPECT_EQ(view.graph(), g);
}

TEST(Overlap, FigureTwo) {
    const Graph g = Figure2::graph();
    EXPECT_EQ(overlap(g, Figure2::s, Figure2::t, 2, 2), (std::vector<NodeId>{Figure2::a, Figure2::a_prime}));
    EXPECT_TRUE(overlap(g, Figure2::s, Figure2::t, 1, 2).empty());
}

TEST(Overlap, SameTerminalContainsIt) {
    const Graph g = synthetic::random_connected_graph(10, 5, 2);
    for (int r = 0; r < 3; ++r) {
        const auto o = overlap(g, 5, 5, r, r + 1);
        EXPECT_TRUE(std::find(o.begin(), o.end(), 5U) != o.end());
    }
}

TEST(Overlap, OracleAgreesWithFloydOnAllRadii) {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = synthetic::random_connected_graph(25, rng.uniform_below(30), rng.next());
        const auto hops = oracle::all_pairs_hops(g);
        const auto s = static_cast<NodeId>(rng.uniform_below(25));
        const auto t = static_cast<NodeId>(rng.uniform_below(25));
        const OverlapOracle fast(g, s, t, 7, 7);
        for (int rs = 0; rs <= 7; ++rs) {
            for (int rt = 0; rt <= 7; ++rt) {
                const auto expected = oracle::overlap(hops, s, t, rs, rt);
                EXPECT_EQ(fast.members(rs, rt), expected);
                EXPECT_EQ(fast.size(rs, rt), expected.size());
                EXPECT_EQ(overlap(g, s, t, rs, rt), expected);
            }
        }
    }
}

}  // namespace
}  // namespace sphere
