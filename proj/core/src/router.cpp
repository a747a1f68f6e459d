#include "sphere/router.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "sphere/error.hpp"
#include "sphere/work_pool.hpp"

namespace sphere {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct SolvedTask {
    std::vector<NodeId> nodes;  // parent ids
    double cost = 0.0;
    double seconds = 0.0;
};

struct TimedRoute {
    Route route;
    double solve_seconds = 0.0;
    double concat_seconds = 0.0;
};

void check_chain(std::span<const TaskTriple> tasks) {
    if (tasks.empty()) {
        throw ArgumentError("solve_tasks: empty task list");
    }
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const auto& task = tasks[i];
        if (!task.subgraph.from_parent(task.entry) || !task.subgraph.from_parent(task.exit)) {
            throw ArgumentError("solve_tasks: task " + std::to_string(i) +
                                " terminals are not in its subgraph");
        }
        if (i + 1 < tasks.size() && task.exit != tasks[i + 1].entry) {
            throw ArgumentError("solve_tasks: chain broken between tasks " + std::to_string(i) + " and " +
                                std::to_string(i + 1));
        }
    }
}

TimedRoute solve_and_fold(std::span<const TaskTriple> tasks, const Solver& solver, unsigned workers) {
    check_chain(tasks);
    std::vector<SolvedTask> solved(tasks.size());

    const auto solve_start = Clock::now();
    parallel_for_index(tasks.size(), workers, [&](std::size_t i) {
        const auto start = Clock::now();
        const TaskTriple& task = tasks[i];
        const Graph& h = task.subgraph.graph();
        const NodeId u = *task.subgraph.from_parent(task.entry);
        const NodeId w = *task.subgraph.from_parent(task.exit);
        Path local;
        try {
            local = solver(h, u, w);
        } catch (const std::exception& e) {
            throw InternalError("solver failed on task " + std::to_string(i) + ": " + e.what());
        }
        if (auto problem = check_path(h, local.nodes, u, w, local.cost)) {
            throw InternalError("solver returned an infeasible path on task " + std::to_string(i) + ": " +
                                *problem);
        }
        SolvedTask& out = solved[i];
        out.nodes.reserve(local.nodes.size());
        for (NodeId v : local.nodes) {
            out.nodes.push_back(task.subgraph.to_parent(v));
        }
        out.cost = local.cost;
        out.seconds = seconds_since(start);
    });
    TimedRoute result;
    result.solve_seconds = seconds_since(solve_start);

    const auto concat_start = Clock::now();
    Route& route = result.route;
    std::size_t total = 1;
    for (const auto& piece : solved) {
        total += piece.nodes.size() - 1;
    }
    route.nodes.reserve(total);
    route.segments.reserve(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const auto& piece = solved[i];
        // Junction node is the previous segment's last node; skip it here.
        auto begin = piece.nodes.begin() + (i == 0 ? 0 : 1);
        route.nodes.insert(route.nodes.end(), begin, piece.nodes.end());
        route.cost += piece.cost;
        route.segments.push_back(Segment{tasks[i].entry, tasks[i].exit, piece.cost,
                                         tasks[i].subgraph.node_count(), tasks[i].subgraph.edge_count(),
                                         piece.seconds});
    }
    result.concat_seconds = seconds_since(concat_start);
    return result;
}

}  // namespace

SolverRegistry::SolverRegistry() {
    solvers_.emplace("dijkstra", [](const Graph& g, NodeId u, NodeId w) { return dijkstra(g, u, w); });
}

SolverRegistry& SolverRegistry::global() {
    static SolverRegistry registry;
    return registry;
}

void SolverRegistry::add(const std::string& name, Solver solver) {
    std::lock_guard lock(mutex_);
    solvers_[name] = std::move(solver);
}

Solver SolverRegistry::get(const std::string& name) const {
    std::lock_guard lock(mutex_);
    auto it = solvers_.find(name);
    if (it == solvers_.end()) {
        throw ArgumentError("unknown solver '" + name + "'");
    }
    return it->second;
}

std::vector<std::string> SolverRegistry::names() const {
    std::lock_guard lock(mutex_);
    std::vector<std::string> out;
    for (const auto& [name, _] : solvers_) {
        out.push_back(name);
    }
    return out;
}

Route solve_tasks(const Graph& g, std::span<const TaskTriple> tasks, const SolverSpec& solver,
                  unsigned workers) {
    if (workers < 1) {
        throw ArgumentError("solve_tasks: workers must be >= 1");
    }
    for (const auto& task : tasks) {
        if (!g.contains(task.entry) || !g.contains(task.exit)) {
            throw ArgumentError("solve_tasks: task terminal outside the graph");
        }
    }
    return solve_and_fold(tasks, SolverRegistry::global().get(solver.name), workers).route;
}

RouteResult route(const Graph& g, NodeId s, NodeId t, const PartitionConfig& cfg, const SolverSpec& solver,
                  unsigned workers) {
    if (workers < 1) {
        throw ArgumentError("route: workers must be >= 1");
    }
    const Solver solve = SolverRegistry::global().get(solver.name);
    const auto start = Clock::now();

    auto tasks = sph_partition(g, s, t, cfg);
    RouteResult result;
    result.stats.partition_seconds = seconds_since(start);

    auto timed = solve_and_fold(tasks, solve, workers);
    result.route = std::move(timed.route);
    result.stats.total_seconds = seconds_since(start);
    result.stats.solve_seconds = timed.solve_seconds;
    result.stats.concat_seconds = timed.concat_seconds;
    result.stats.task_count = tasks.size();
    for (const auto& task : tasks) {
        result.stats.max_subgraph_nodes = std::max(result.stats.max_subgraph_nodes, task.subgraph.node_count());
        result.stats.forced_tasks += task.forced ? 1 : 0;
    }
    for (const auto& seg : result.route.segments) {
        result.stats.task_seconds.push_back(seg.solve_seconds);
    }
    return result;
}

}  // namespace sphere
