#include "cli/cli.hpp"

#include <filesystem>
#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "sphere/error.hpp"

namespace sphere::cli {

namespace {

struct Binding {
    std::string key;
    CLI::Option* option = nullptr;
    std::string value;
    /// Value written when the option is a bare switch.
    const char* flag_value = nullptr;
};

class Subcommand {
  public:
    Subcommand(CLI::App& app, const std::string& name, const std::string& help,
               int (*handler)(const Context&))
        : app_(app.add_subcommand(name, help)), handler_(handler) {
        app_->add_option("--config", config_path_, "flat key = value config file");
    }

    Subcommand& option(const std::string& key, const std::string& help) {
        auto& b = bindings_.emplace_back(std::make_unique<Binding>());
        b->key = key;
        b->option = app_->add_option("--" + key, b->value, help);
        return *this;
    }

    Subcommand& flag(const std::string& name, const std::string& key, const char* value, const std::string& help) {
        auto& b = bindings_.emplace_back(std::make_unique<Binding>());
        b->key = key;
        b->flag_value = value;
        b->option = app_->add_flag("--" + name, help);
        return *this;
    }

    bool parsed() const { return app_->parsed(); }

    int invoke(std::ostream& out, std::ostream& err) const {
        Layers layers;
        if (!config_path_.empty()) {
            layers.load_file(config_path_);
        }
        layers.load_env();
        for (const auto& b : bindings_) {
            if (b->option->count() > 0) {
                layers.set_flag(b->key, b->flag_value ? std::string(b->flag_value) : b->value);
            }
        }
        const CliConfig cfg = CliConfig::resolve(layers);
        return handler_({cfg, out, err});
    }

  private:
    CLI::App* app_;
    int (*handler_)(const Context&);
    std::string config_path_;
    std::vector<std::unique_ptr<Binding>> bindings_;
};

void add_graph_options(Subcommand& cmd) {
    cmd.option("graph", "DIMACS .gr or .gr.gz file")
        .flag("largest-component", "largest-component", "true", "keep only the largest connected component")
        .flag("no-cache", "cache", "false", "ignore and do not write the binary graph cache")
        .flag("json", "json", "true", "machine-readable output")
        .flag("quiet", "quiet", "true", "suppress normal output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Source-target-aware spherical partitioning for shortest-path routing", "sphere"};
    app.require_subcommand(1);
    app.set_version_flag("--version", SPHERE_VERSION);

    std::vector<std::unique_ptr<Subcommand>> commands;
    auto add = [&](const std::string& name, const std::string& help, int (*handler)(const Context&)) -> Subcommand& {
        return *commands.emplace_back(std::make_unique<Subcommand>(app, name, help, handler));
    };

    auto& route = add("route", "route s -> t with spherical partitioning", cmd_route);
    add_graph_options(route);
    route.option("s", "source node (1-based)")
        .option("t", "target node (1-based)")
        .option("r-max", "leaf sphere radius in hops")
        .option("r-max-divisor", "use r_max = floor(hops(s, t) / divisor) instead of --r-max")
        .option("seed", "anchor seed")
        .option("workers", "solver threads")
        .option("solver", "subproblem solver name")
        .option("emit-path", "write the node sequence to FILE");

    auto& partition = add("partition", "emit the task list as JSON lines", cmd_partition);
    add_graph_options(partition);
    partition.option("s", "source node (1-based)")
        .option("t", "target node (1-based)")
        .option("r-max", "leaf sphere radius in hops")
        .option("r-max-divisor", "use r_max = floor(hops(s, t) / divisor) instead of --r-max")
        .option("seed", "anchor seed")
        .option("out", "write to FILE instead of standard output");

    auto& baseline = add("baseline", "route s -> t with a reference method", cmd_baseline);
    add_graph_options(baseline);
    baseline.option("s", "source node (1-based)")
        .option("t", "target node (1-based)")
        .option("method", "dijkstra, corridor or louvain")
        .option("k", "cell count for corridor")
        .option("seed", "partition seed");

    auto& bench = add("bench", "run the seeded experiment and write CSVs", cmd_bench);
    add_graph_options(bench);
    bench.option("problem-seeds", "outer seeds, e.g. 1-30")
        .option("inner-seeds", "inner seeds, e.g. 1-5")
        .option("methods", "comma-separated subset of sphere,corridor,louvain")
        .option("r-max", "leaf sphere radius in hops")
        .option("r-max-divisor", "per-pair r_max = floor(hops(s, t) / divisor)")
        .option("k", "cell count for corridor")
        .option("workers", "solver threads")
        .option("output-dir", "directory for records.csv, summary.csv, profiles.csv")
        .flag("no-warmup", "warmup", "false", "skip the untimed warm-up run");

    auto& profiles = add("profiles", "aggregate records.csv into summary and profiles", cmd_profiles);
    profiles.option("records", "records.csv from a bench run")
        .option("inner-seeds", "inner seeds expected per cell")
        .option("output-dir", "directory for summary.csv and profiles.csv")
        .flag("json", "json", "true", "machine-readable output")
        .flag("quiet", "quiet", "true", "suppress normal output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    for (const auto& cmd : commands) {
        if (!cmd->parsed()) {
            continue;
        }
        try {
            return cmd->invoke(out, err);
        } catch (const UsageError& e) {
            err << "usage error: " << e.what() << '\n';
            return kExitUsage;
        } catch (const ConfigError& e) {
            err << "config error: " << e.what() << '\n';
            return kExitData;
        } catch (const IoError& e) {
            err << "io error: " << e.what() << '\n';
            return kExitData;
        } catch (const ParseError& e) {
            err << "parse error: " << e.what() << '\n';
            return kExitData;
        } catch (const DisconnectedError& e) {
            err << "disconnected: " << e.what() << '\n';
            return kExitData;
        } catch (const ArgumentError& e) {
            err << "invalid input: " << e.what() << '\n';
            return kExitData;
        } catch (const IncompleteRunError& e) {
            err << "incomplete records: " << e.what() << '\n';
            return kExitData;
        } catch (const std::filesystem::filesystem_error& e) {
            err << "io error: " << e.what() << '\n';
            return kExitData;
        } catch (const std::exception& e) {
            err << "internal error: " << e.what() << '\n';
            return kExitInternal;
        }
    }
    err << app.help();
    return kExitUsage;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, std::cout, std::cerr);
}

}  // namespace sphere::cli
