#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sphere/graph.hpp"

namespace sphere {

// ---------------------------------------------------------------------------
// Sampling and metrics

struct SampledPair {
    NodeId s = kInvalidNode;
    NodeId t = kInvalidNode;
    /// Draws discarded because t was in a different component than s.
    std::size_t component_resamples = 0;
};

/// Uniform ordered pair with s != t, deterministic in `problem_seed`.
/// Requires node_count >= 2 and at least one edge when the graph is disconnected.
SampledPair sample_st(const Graph& g, std::uint64_t problem_seed);

/// (cost - oracle) / oracle, with negative noise below 1e-9 relative clamped
/// to zero. Throws ArgumentError if oracle <= 0 or cost is meaningfully below it.
double gap(double cost, double oracle);

double median(std::vector<double> values);
double mean(std::span<const double> values);
/// Population standard deviation.
double stddev(std::span<const double> values);

// ---------------------------------------------------------------------------
// Records and aggregation

struct ExperimentRecord {
    int p = 0;
    int q = 0;
    std::string method;
    NodeId s = kInvalidNode;  // 0-based; CSV files store 1-based ids
    NodeId t = kInvalidNode;
    double cost = 0.0;
    double oracle = 0.0;
    double gap = 0.0;
    double time_s = 0.0;
    std::size_t tasks = 0;
    bool fallback = false;

    friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

struct InstanceSummary {
    int p = 0;
    std::string method;
    double median_gap = 0.0;
    double mean_gap = 0.0;
    double std_gap = 0.0;
    double median_time = 0.0;
    double mean_time = 0.0;

    friend bool operator==(const InstanceSummary&, const InstanceSummary&) = default;
};

/// Per-(p, method) medians and means over the inner seeds. Every (p, method)
/// present must have exactly one record per seed in `inner_seeds`; otherwise
/// IncompleteRunError lists the missing cells. Output is sorted by (p, method).
std::vector<InstanceSummary> aggregate(std::span<const ExperimentRecord> records,
                                       std::span<const int> inner_seeds);

// ---------------------------------------------------------------------------
// Profiles

struct ProfileCurve {
    std::string method;
    /// (tau, fraction) breakpoints, tau ascending; right-continuous step function.
    std::vector<std::pair<double, double>> points;

    /// Fraction at tau (0 before the first breakpoint).
    double at(double tau) const;
};

/// Values per method, aligned by instance index (all vectors equal length).
using MethodTable = std::map<std::string, std::vector<double>>;

/// Fraction of instances whose time is within ratio tau of the per-instance
/// best. Breakpoints are the union of achieved ratios over all methods.
/// Throws ArgumentError on nonpositive times or ragged input.
std::vector<ProfileCurve> performance_profile(const MethodTable& times);

/// Fraction of instances with gap <= tau. Breakpoints are 0 plus the union of
/// achieved gaps. Throws ArgumentError on negative gaps or ragged input.
std::vector<ProfileCurve> accuracy_profile(const MethodTable& gaps);

// ---------------------------------------------------------------------------
// Pareto dominance

struct MethodPoint {
    double time = 0.0;
    double gap = 0.0;
};

enum class Dominance { Dominates, Dominated, Neither };

/// a dominates b iff a.time <= b.time and a.gap <= b.gap with one strict.
Dominance compare_points(MethodPoint a, MethodPoint b);

struct InstanceVerdict {
    std::string instance;
    std::map<std::string, Dominance> versus;  // baseline name -> verdict of the reference method
    bool dominates_all = false;
};

struct DominanceReport {
    std::vector<InstanceVerdict> instances;
    std::map<std::string, std::size_t> dominated_count;  // per baseline
    std::size_t dominates_all_count = 0;
};

/// `table` maps instance name -> method -> point; `reference` is compared
/// against every other method on each instance.
DominanceReport pareto_dominance(const std::map<std::string, std::map<std::string, MethodPoint>>& table,
                                 const std::string& reference = "sphere");

/// Instance "P<p>" -> method -> (time, gap) from summaries, skipping `exclude`
/// (the exact oracle by default).
std::map<std::string, std::map<std::string, MethodPoint>> pareto_table(
    std::span<const InstanceSummary> summaries, bool use_median = true, const std::string& exclude = "dijkstra");

// ---------------------------------------------------------------------------
// Experiment protocol

struct ExperimentConfig {
    std::string graph_path;
    std::vector<int> problem_seeds;  // default 1..30
    std::vector<int> inner_seeds;    // default 1..5
    std::vector<std::string> methods{"sphere", "corridor", "louvain"};
    int r_max = 1800;
    /// When set, each pair uses r_max = max(1, floor(R / divisor)) with R the
    /// pair's hop distance, instead of the fixed r_max.
    std::optional<double> r_max_divisor;
    std::uint32_t k = 64;
    unsigned workers = 1;
    bool warmup = true;

    ExperimentConfig();
    void validate() const;
};

using ProgressFn = std::function<void(const ExperimentRecord&)>;

/// Runs every (p, q, method) cell plus the Dijkstra oracle once per p. The
/// oracle is recorded under method "dijkstra" with the same measurement for
/// every q. Baseline timings include building their partition.
std::vector<ExperimentRecord> run_experiment(const Graph& g, const ExperimentConfig& cfg,
                                             const ProgressFn& progress = {});

/// Summaries -> per-method tables aligned by p (sorted), on median or mean basis.
MethodTable time_table(std::span<const InstanceSummary> summaries, bool use_median);
MethodTable gap_table(std::span<const InstanceSummary> summaries, bool use_median);

// ---------------------------------------------------------------------------
// CSV (schema 1). Every file starts with '#'-prefixed metadata lines.

inline constexpr int kCsvSchema = 1;

using Metadata = std::vector<std::pair<std::string, std::string>>;

void write_records_csv(std::ostream& out, std::span<const ExperimentRecord> records, const Metadata& meta);
std::vector<ExperimentRecord> read_records_csv(std::istream& in);

void write_summary_csv(std::ostream& out, std::span<const InstanceSummary> summaries, const Metadata& meta);

struct ProfileRow {
    std::string kind;   // runtime | accuracy
    std::string basis;  // median | mean
    ProfileCurve curve;
};

void write_profiles_csv(std::ostream& out, std::span<const ProfileRow> rows, const Metadata& meta);

/// Runtime and accuracy profiles on both bases from summaries.
std::vector<ProfileRow> build_profiles(std::span<const InstanceSummary> summaries);

}  // namespace sphere
