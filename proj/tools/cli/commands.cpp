#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sphere/baselines.hpp"
#include "sphere/bench.hpp"
#include "sphere/error.hpp"
#include "sphere/graph_io.hpp"
#include "sphere/partition.hpp"
#include "sphere/router.hpp"
#include "sphere/search.hpp"

namespace sphere::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string hex(std::uint64_t v) {
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << v;
    return ss.str();
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream ss;
    ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return ss.str();
}

std::string fixed(double v, int digits = 6) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(digits) << v;
    return ss.str();
}

std::string full(double v) {
    std::ostringstream ss;
    ss << std::setprecision(17) << v;
    return ss.str();
}

Metadata metadata(const Context& ctx, const std::string& command, const Graph* graph) {
    Metadata meta = {
        {"tool", "sphere"},
        {"version", SPHERE_VERSION},
        {"command", command},
        {"config_hash", hex(ctx.cfg.hash())},
        {"graph_hash", graph ? hex(graph->content_hash()) : "none"},
        {"timestamp", utc_timestamp()},
    };
    for (const auto& [key, value] : ctx.cfg.resolved) {
        meta.emplace_back("config." + key, value);
    }
    return meta;
}

json metadata_json(const Metadata& meta) {
    json obj = json::object();
    for (const auto& [key, value] : meta) {
        obj[key] = value;
    }
    return obj;
}

void write_hash_metadata(std::ostream& out, const Metadata& meta) {
    for (const auto& [key, value] : meta) {
        out << "# " << key << '=' << value << '\n';
    }
}

std::ofstream open_output(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    return out;
}

LoadedGraph load(const CliConfig& cfg) {
    if (cfg.graph.empty()) {
        throw UsageError("--graph is required");
    }
    return load_graph(cfg.graph, LoadOptions{cfg.use_cache, cfg.largest_component});
}

struct Terminals {
    NodeId s = kInvalidNode;
    NodeId t = kInvalidNode;
};

NodeId internal_id(const LoadedGraph& lg, std::uint32_t one_based, const char* name) {
    const auto v = lg.from_file_id(one_based - 1);
    if (!v) {
        throw ArgumentError(std::string("node --") + name + " " + std::to_string(one_based) +
                            (lg.to_file_id.empty() ? " is out of range" : " is outside the largest component"));
    }
    return *v;
}

Terminals terminals(const CliConfig& cfg, const LoadedGraph& lg) {
    if (!cfg.s || !cfg.t) {
        throw UsageError("--s and --t are required");
    }
    return {internal_id(lg, *cfg.s, "s"), internal_id(lg, *cfg.t, "t")};
}

PartitionConfig partition_config(const CliConfig& cfg, const Graph& g, Terminals st) {
    PartitionConfig pc;
    pc.r_max = cfg.r_max;
    pc.rng_seed = cfg.seed;
    if (cfg.r_max_divisor) {
        const double hops = static_cast<double>(hop_distance(g, st.s, st.t));
        pc.r_max = std::max(1, static_cast<int>(std::floor(hops / *cfg.r_max_divisor)));
    }
    return pc;
}

void check_solver(const std::string& name) {
    const auto names = SolverRegistry::global().names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::string known;
        for (const auto& n : names) {
            known += (known.empty() ? "" : ", ") + n;
        }
        throw UsageError("unknown solver '" + name + "' (known: " + known + ")");
    }
}

void print_pareto(const Context& ctx, const DominanceReport& report, std::size_t instances) {
    ctx.out << "pareto (sphere vs baselines, median basis, " << instances << " instances)\n";
    for (const auto& [method, count] : report.dominated_count) {
        ctx.out << "  dominates " << std::left << std::setw(10) << method << count << '/' << instances << '\n';
    }
    ctx.out << "  dominates all      " << report.dominates_all_count << '/' << instances << '\n';
}

json pareto_json(const DominanceReport& report, std::size_t instances) {
    json obj;
    obj["instances"] = instances;
    obj["dominated_count"] = report.dominated_count;
    obj["dominates_all_count"] = report.dominates_all_count;
    return obj;
}

void write_aggregates(const Context& ctx, const std::vector<InstanceSummary>& summaries, const Metadata& meta) {
    const std::filesystem::path dir = ctx.cfg.output_dir;
    {
        auto out = open_output(dir / "summary.csv");
        write_summary_csv(out, summaries, meta);
    }
    {
        auto out = open_output(dir / "profiles.csv");
        write_profiles_csv(out, build_profiles(summaries), meta);
    }
}

int report_aggregates(const Context& ctx, const std::vector<InstanceSummary>& summaries,
                      const std::vector<std::string>& written) {
    const auto table = pareto_table(summaries);
    const bool has_sphere = std::any_of(summaries.begin(), summaries.end(),
                                        [](const InstanceSummary& s) { return s.method == "sphere"; });
    if (ctx.cfg.json) {
        json obj;
        obj["files"] = written;
        if (has_sphere) {
            obj["pareto"] = pareto_json(pareto_dominance(table), table.size());
        }
        ctx.out << obj.dump() << '\n';
    } else if (!ctx.cfg.quiet) {
        for (const auto& f : written) {
            ctx.out << "wrote " << f << '\n';
        }
        if (has_sphere) {
            print_pareto(ctx, pareto_dominance(table), table.size());
        }
    }
    return 0;
}

}  // namespace

int cmd_route(const Context& ctx) {
    const auto& cfg = ctx.cfg;
    check_solver(cfg.solver);
    const LoadedGraph lg = load(cfg);
    const Terminals st = terminals(cfg, lg);
    const PartitionConfig pc = partition_config(cfg, lg.graph, st);
    const RouteResult result = route(lg.graph, st.s, st.t, pc, SolverSpec{cfg.solver}, cfg.workers);
    const Metadata meta = metadata(ctx, "route", &lg.graph);

    if (!cfg.emit_path.empty()) {
        auto out = open_output(cfg.emit_path);
        write_hash_metadata(out, meta);
        for (NodeId v : result.route.nodes) {
            out << lg.file_id(v) + 1 << '\n';
        }
    }

    const auto& stats = result.stats;
    if (cfg.json) {
        json obj;
        obj["metadata"] = metadata_json(meta);
        obj["s"] = *cfg.s;
        obj["t"] = *cfg.t;
        obj["cost"] = result.route.cost;
        obj["nodes"] = result.route.nodes.size();
        obj["r_max"] = pc.r_max;
        obj["tasks"] = stats.task_count;
        obj["forced_tasks"] = stats.forced_tasks;
        obj["max_subgraph_nodes"] = stats.max_subgraph_nodes;
        obj["timings"] = {{"partition_s", stats.partition_seconds},
                          {"solve_s", stats.solve_seconds},
                          {"concat_s", stats.concat_seconds},
                          {"total_s", stats.total_seconds}};
        ctx.out << obj.dump() << '\n';
    } else if (!cfg.quiet) {
        ctx.out << "cost          " << full(result.route.cost) << '\n'
                << "nodes         " << result.route.nodes.size() << '\n'
                << "r_max         " << pc.r_max << '\n'
                << "tasks         " << stats.task_count << " (forced " << stats.forced_tasks << ")\n"
                << "max subgraph  " << stats.max_subgraph_nodes << " nodes\n"
                << "partition     " << fixed(stats.partition_seconds) << " s\n"
                << "solve         " << fixed(stats.solve_seconds) << " s\n"
                << "concat        " << fixed(stats.concat_seconds) << " s\n"
                << "total         " << fixed(stats.total_seconds) << " s\n";
    }
    return 0;
}

int cmd_partition(const Context& ctx) {
    const auto& cfg = ctx.cfg;
    const LoadedGraph lg = load(cfg);
    const Terminals st = terminals(cfg, lg);
    const PartitionConfig pc = partition_config(cfg, lg.graph, st);
    const auto tasks = sph_partition(lg.graph, st.s, st.t, pc);

    std::ofstream file;
    if (!cfg.out.empty()) {
        file = open_output(cfg.out);
    }
    std::ostream& out = cfg.out.empty() ? ctx.out : file;
    if (!cfg.quiet || !cfg.out.empty()) {
        out << json{{"metadata", metadata_json(metadata(ctx, "partition", &lg.graph))}}.dump() << '\n';
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            const auto& task = tasks[i];
            json line;
            line["index"] = i;
            line["entry"] = lg.file_id(task.entry) + 1;
            line["exit"] = lg.file_id(task.exit) + 1;
            line["nodes"] = task.subgraph.graph().node_count();
            line["edges"] = task.subgraph.graph().edge_count();
            line["radius"] = task.radius;
            line["depth"] = task.depth;
            line["forced"] = task.forced;
            out << line.dump() << '\n';
        }
    }
    return 0;
}

int cmd_baseline(const Context& ctx) {
    const auto& cfg = ctx.cfg;
    const LoadedGraph lg = load(cfg);
    const Terminals st = terminals(cfg, lg);
    const Graph& g = lg.graph;

    const auto start = Clock::now();
    BaselineResult result;
    if (cfg.method == "dijkstra") {
        result.path = dijkstra_full(g, st.s, st.t);
    } else if (cfg.method == "corridor") {
        result = corridor_route(g, st.s, st.t, grow_cells(g, cfg.k, cfg.seed));
    } else {
        result = louvain_route(g, st.s, st.t, louvain(g, cfg.seed));
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const double oracle = cfg.method == "dijkstra" ? result.path.cost : dijkstra_full(g, st.s, st.t).cost;
    const double route_gap = gap(result.path.cost, oracle);

    if (cfg.json) {
        json obj;
        obj["metadata"] = metadata_json(metadata(ctx, "baseline", &g));
        obj["method"] = cfg.method;
        obj["cost"] = result.path.cost;
        obj["oracle"] = oracle;
        obj["gap"] = route_gap;
        obj["nodes"] = result.path.nodes.size();
        obj["corridor_nodes"] = result.stats.corridor_nodes;
        obj["widened"] = result.stats.widened;
        obj["fallback"] = result.stats.fallback;
        obj["time_s"] = seconds;
        ctx.out << obj.dump() << '\n';
    } else if (!cfg.quiet) {
        ctx.out << "method        " << cfg.method << '\n'
                << "cost          " << full(result.path.cost) << '\n'
                << "gap           " << fixed(route_gap) << '\n'
                << "nodes         " << result.path.nodes.size() << '\n';
        if (cfg.method != "dijkstra") {
            ctx.out << "corridor      " << result.stats.corridor_nodes << " nodes"
                    << (result.stats.widened ? " (widened)" : "") << (result.stats.fallback ? " (fallback)" : "")
                    << '\n';
        }
        ctx.out << "time          " << fixed(seconds) << " s\n";
    }
    return 0;
}

int cmd_bench(const Context& ctx) {
    const auto& cfg = ctx.cfg;
    const LoadedGraph lg = load(cfg);

    ExperimentConfig ec;
    ec.graph_path = cfg.graph;
    ec.problem_seeds = cfg.problem_seeds;
    ec.inner_seeds = cfg.inner_seeds;
    ec.methods = cfg.methods;
    ec.r_max = cfg.r_max;
    ec.r_max_divisor = cfg.r_max_divisor;
    ec.k = cfg.k;
    ec.workers = cfg.workers;
    ec.warmup = cfg.warmup;
    ec.validate();

    ProgressFn progress;
    if (!cfg.quiet && !cfg.json) {
        progress = [&](const ExperimentRecord& r) {
            if (r.method == "dijkstra") {
                return;
            }
            ctx.err << "p=" << r.p << " q=" << r.q << ' ' << r.method << " gap=" << fixed(r.gap, 4)
                    << " time=" << fixed(r.time_s) << "s\n";
        };
    }
    const auto records = run_experiment(lg.graph, ec, progress);

    Metadata meta = metadata(ctx, "bench", &lg.graph);
    meta.emplace_back("note.oracle_timing", "dijkstra measured once per p and repeated for every q");
    meta.emplace_back("note.louvain", "weighted edges, resolution 1.0");
    meta.emplace_back("note.corridor_cells", "farthest-point bfs region growing");

    const std::filesystem::path dir = cfg.output_dir;
    {
        auto out = open_output(dir / "records.csv");
        write_records_csv(out, records, meta);
    }
    const auto summaries = aggregate(records, cfg.inner_seeds);
    write_aggregates(ctx, summaries, meta);
    return report_aggregates(
        ctx, summaries,
        {(dir / "records.csv").string(), (dir / "summary.csv").string(), (dir / "profiles.csv").string()});
}

int cmd_profiles(const Context& ctx) {
    const auto& cfg = ctx.cfg;
    if (cfg.records.empty()) {
        throw UsageError("--records is required");
    }
    std::ifstream in(cfg.records);
    if (!in) {
        throw IoError("cannot open records file: " + cfg.records);
    }
    const auto records = read_records_csv(in);
    const auto summaries = aggregate(records, cfg.inner_seeds);
    Metadata meta = metadata(ctx, "profiles", nullptr);
    meta.emplace_back("records", cfg.records);
    write_aggregates(ctx, summaries, meta);
    const std::filesystem::path dir = cfg.output_dir;
    return report_aggregates(ctx, summaries, {(dir / "summary.csv").string(), (dir / "profiles.csv").string()});
}

}  // namespace sphere::cli
