#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sphere/error.hpp"
#include "sphere/rng.hpp"
#include "sphere/router.hpp"
#include "sphere/spheres.hpp"
#include "sphere/synthetic.hpp"
#include "sphere/work_pool.hpp"

namespace sphere {
namespace {

using synthetic::Figure2;

PartitionConfig config(int r_max, std::uint64_t seed = 0) {
    PartitionConfig cfg;
    cfg.r_max = r_max;
    cfg.rng_seed = seed;
    return cfg;
}

TaskTriple task(const Graph& g, std::vector<NodeId> nodes, NodeId entry, NodeId exit) {
    return TaskTriple{induced_subgraph(g, nodes), entry, exit, 0, 0, false};
}

TEST(SolveTasks, FigureTwoTasks) {
    const Graph g = Figure2::graph();
    const std::vector<TaskTriple> tasks = {
        TaskTriple{induced_sphere(g, Figure2::s, 2), Figure2::s, Figure2::a, 2, 0, false},
        TaskTriple{induced_sphere(g, Figure2::t, 2), Figure2::a, Figure2::t, 2, 0, false},
    };
    const Route r = solve_tasks(g, tasks, {}, 1);
    const std::vector<NodeId> expected = {Figure2::s, Figure2::u2, Figure2::a, Figure2::u5, Figure2::t};
    EXPECT_EQ(r.nodes, expected);
    EXPECT_EQ(r.cost, 4.0);
    ASSERT_EQ(r.segments.size(), 2U);
    EXPECT_EQ(r.segments[0].cost, 2.0);
}

TEST(SolveTasks, SingleTaskIsDijkstra) {
    const Graph g = synthetic::random_connected_graph(40, 50, 3);
    std::vector<NodeId> all(40);
    for (NodeId v = 0; v < 40; ++v) {
        all[v] = v;
    }
    const std::vector<TaskTriple> tasks = {task(g, all, 2, 37)};
    const Route r = solve_tasks(g, tasks, {}, 1);
    const Path p = dijkstra(g, 2, 37);
    EXPECT_EQ(r.nodes, p.nodes);
    EXPECT_EQ(r.cost, p.cost);
}

TEST(SolveTasks, PathChain) {
    const Graph g = synthetic::path_graph(9);
    std::vector<TaskTriple> tasks;
    for (NodeId a = 0; a < 8; a += 2) {
        tasks.push_back(task(g, {a, a + 1, a + 2}, a, a + 2));
    }
    const Route r = solve_tasks(g, tasks, {}, 2);
    EXPECT_EQ(r.nodes, (std::vector<NodeId>{0, 1, 2, 3, 4, 5, 6, 7, 8}));
    EXPECT_EQ(r.cost, 8.0);
}

TEST(SolveTasks, BrokenChainIsArgumentError) {
    const Graph g = synthetic::path_graph(5);
    const std::vector<TaskTriple> tasks = {task(g, {0, 1}, 0, 1), task(g, {2, 3}, 2, 3)};
    EXPECT_THROW(solve_tasks(g, tasks, {}, 1), ArgumentError);
    EXPECT_THROW(solve_tasks(g, std::vector<TaskTriple>{}, {}, 1), ArgumentError);
}

TEST(SolveTasks, SolverFailureNamesTask) {
    SolverRegistry::global().add("broken-for-test", [](const Graph&, NodeId u, NodeId) {
        return Path{{u}, 0.0};
    });
    const Graph g = synthetic::path_graph(5);
    const std::vector<TaskTriple> tasks = {task(g, {0, 1, 2}, 0, 2), task(g, {2, 3, 4}, 2, 4)};
    try {
        solve_tasks(g, tasks, SolverSpec{"broken-for-test"}, 1);
        FAIL() << "expected an internal error";
    } catch (const InternalError& e) {
        EXPECT_NE(std::string(e.what()).find("task 0"), std::string::npos) << e.what();
    }
    EXPECT_THROW(SolverRegistry::global().get("no-such-solver"), ArgumentError);
}

TEST(Route, FigureTwo) {
    const RouteResult r = route(Figure2::graph(), Figure2::s, Figure2::t, config(2));
    EXPECT_EQ(r.route.cost, 4.0);
    EXPECT_EQ(r.stats.task_count, 2U);
    EXPECT_EQ(check_path(Figure2::graph(), r.route.nodes, Figure2::s, Figure2::t, 4.0), std::nullopt);
}

TEST(Route, AdjacentTerminals) {
    const Graph g = synthetic::random_connected_graph(30, 40, 12);
    for (const auto& e : g.edges()) {
        const RouteResult r = route(g, e.u, e.v, config(1800));
        EXPECT_GE(r.route.cost, dijkstra(g, e.u, e.v).cost);
        EXPECT_EQ(check_path(g, r.route.nodes, e.u, e.v, r.route.cost), std::nullopt);
    }
}

TEST(Route, PathGraphIsExact) {
    const Graph g = synthetic::path_graph(40);
    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        const auto s = static_cast<NodeId>(rng.uniform_below(40));
        const auto t = static_cast<NodeId>(rng.uniform_below(40));
        if (s == t) {
            continue;
        }
        const RouteResult r = route(g, s, t, config(1 + static_cast<int>(rng.uniform_below(5)), rng.next()));
        EXPECT_EQ(r.route.cost, std::abs(static_cast<double>(s) - static_cast<double>(t)));
    }
}

TEST(Route, GridIsConservative) {
    const Graph g = synthetic::grid_graph(30, 30);
    Rng rng(30);
    int cases = 0;
    int exact = 0;
    while (cases < 100) {
        const auto s = static_cast<NodeId>(rng.uniform_below(900));
        const auto t = static_cast<NodeId>(rng.uniform_below(900));
        if (s == t) {
            continue;
        }
        ++cases;
        const RouteResult r = route(g, s, t, config(4, rng.next()));
        const double best = dijkstra(g, s, t).cost;
        EXPECT_GE(r.route.cost, best);
        EXPECT_EQ(check_path(g, r.route.nodes, s, t, r.route.cost), std::nullopt);
        exact += r.route.cost == best ? 1 : 0;
    }
    // With unit weights every node of a last nonempty overlap lies on a shortest path.
    EXPECT_EQ(exact, cases);
}

TEST(Route, WorkersDoNotChangeResult) {
    const Graph g = synthetic::grid_graph(40, 40, 1.0, 10.0, 2);
    Rng rng(6);
    for (int i = 0; i < 20; ++i) {
        const auto s = static_cast<NodeId>(rng.uniform_below(1600));
        const auto t = static_cast<NodeId>(rng.uniform_below(1600));
        if (s == t) {
            continue;
        }
        const auto cfg = config(3, rng.next());
        const RouteResult one = route(g, s, t, cfg, {}, 1);
        for (unsigned workers : {2U, 8U}) {
            const RouteResult many = route(g, s, t, cfg, {}, workers);
            EXPECT_EQ(many.route.nodes, one.route.nodes);
            EXPECT_EQ(many.route.cost, one.route.cost);
        }
    }
}

TEST(Route, StatsAreFilled) {
    const Graph g = synthetic::grid_graph(30, 30, 1.0, 5.0, 1);
    const RouteResult r = route(g, 0, 899, config(3), {}, 2);
    EXPECT_GT(r.stats.task_count, 2U);
    EXPECT_EQ(r.stats.task_seconds.size(), r.stats.task_count);
    EXPECT_GE(r.stats.total_seconds, r.stats.partition_seconds);
    EXPECT_GT(r.stats.max_subgraph_nodes, 0U);
    EXPECT_THROW(route(g, 0, 899, config(3), {}, 0), ArgumentError);
}

TEST(WorkPool, RunsEveryIndexAndRethrowsLowest) {
    std::vector<int> hits(1000, 0);
    parallel_for_index(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    EXPECT_EQ(std::count(hits.begin(), hits.end(), 1), 1000);
    try {
        parallel_for_index(100, 4, [](std::size_t i) {
            if (i == 17 || i == 60) {
                throw std::runtime_error(std::to_string(i));
            }
        });
        FAIL();
    } catch (const std::runtime_error& e) {
        EXPECT_STREQ(e.what(), "17");
    }
}

}  // namespace
}  // namespace sphere
