#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "sphere/graph.hpp"
#include "sphere/partition.hpp"
#include "sphere/search.hpp"

namespace sphere {

/// Per-task piece of a route.
struct Segment {
    NodeId entry = kInvalidNode;
    NodeId exit = kInvalidNode;
    double cost = 0.0;
    std::size_t subgraph_nodes = 0;
    std::size_t subgraph_edges = 0;
    double solve_seconds = 0.0;
};

struct Route {
    std::vector<NodeId> nodes;
    double cost = 0.0;
    std::vector<Segment> segments;
};

/// Solves entry -> exit inside one subgraph (local ids).
using Solver = std::function<Path(const Graph&, NodeId, NodeId)>;

/// Named solvers. "dijkstra" is always registered.
class SolverRegistry {
  public:
    static SolverRegistry& global();

    void add(const std::string& name, Solver solver);
    /// Throws ArgumentError for unknown names.
    Solver get(const std::string& name) const;
    std::vector<std::string> names() const;

  private:
    SolverRegistry();

    mutable std::mutex mutex_;
    std::map<std::string, Solver> solvers_;
};

struct SolverSpec {
    std::string name = "dijkstra";
};

/// Solves every task independently on up to `workers` threads and folds the
/// paths left to right, dropping the repeated junction node.
///
/// Throws ArgumentError if the tasks do not form a chain and InternalError
/// (naming the task index) if a solver fails or returns an infeasible path.
Route solve_tasks(const Graph& g, std::span<const TaskTriple> tasks, const SolverSpec& solver,
                  unsigned workers);

struct RunStats {
    double partition_seconds = 0.0;
    double solve_seconds = 0.0;          // wall-clock of the parallel solve phase
    std::vector<double> task_seconds;    // per task
    double concat_seconds = 0.0;
    double total_seconds = 0.0;
    std::size_t task_count = 0;
    std::size_t max_subgraph_nodes = 0;
    std::size_t forced_tasks = 0;
};

struct RouteResult {
    Route route;
    RunStats stats;
};

/// Partition with sph_partition, then solve_tasks. Timings use a monotonic clock.
RouteResult route(const Graph& g, NodeId s, NodeId t, const PartitionConfig& cfg,
                  const SolverSpec& solver = {}, unsigned workers = 1);

}  // namespace sphere
