#include "sphere/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "sphere/baselines.hpp"
#include "sphere/error.hpp"
#include "sphere/rng.hpp"
#include "sphere/router.hpp"
#include "sphere/search.hpp"

namespace sphere {

SampledPair sample_st(const Graph& g, std::uint64_t problem_seed) {
    const std::size_t n = g.node_count();
    if (n < 2) {
        throw ArgumentError("sample_st: need at least two nodes");
    }
    std::vector<std::uint32_t> component;
    if (!is_connected(g)) {
        if (g.edge_count() == 0) {
            throw ArgumentError("sample_st: graph has no edges, no connected pair exists");
        }
        component = connected_components(g);
    }
    Rng rng(mix64(problem_seed));
    SampledPair pair;
    for (;;) {
        pair.s = static_cast<NodeId>(rng.uniform_below(n));
        pair.t = static_cast<NodeId>(rng.uniform_below(n));
        if (pair.s == pair.t) {
            continue;
        }
        if (!component.empty() && component[pair.s] != component[pair.t]) {
            ++pair.component_resamples;
            continue;
        }
        return pair;
    }
}

double gap(double cost, double oracle) {
    constexpr double kTolerance = 1e-9;
    if (!(oracle > 0.0)) {
        throw ArgumentError("gap: oracle cost must be positive");
    }
    const double raw = (cost - oracle) / oracle;
    if (raw < -kTolerance) {
        throw ArgumentError("gap: cost " + std::to_string(cost) + " is below the oracle " + std::to_string(oracle));
    }
    return std::abs(raw) <= kTolerance ? 0.0 : raw;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw ArgumentError("median of an empty set");
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

double mean(std::span<const double> values) {
    if (values.empty()) {
        throw ArgumentError("mean of an empty set");
    }
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double stddev(std::span<const double> values) {
    const double mu = mean(values);
    double sum = 0.0;
    for (double v : values) {
        sum += (v - mu) * (v - mu);
    }
    return std::sqrt(sum / static_cast<double>(values.size()));
}

std::vector<InstanceSummary> aggregate(std::span<const ExperimentRecord> records,
                                       std::span<const int> inner_seeds) {
    if (inner_seeds.empty()) {
        throw ArgumentError("aggregate: no inner seeds given");
    }
    std::map<std::pair<int, std::string>, std::map<int, const ExperimentRecord*>> cells;
    std::vector<std::string> problems;
    for (const auto& r : records) {
        auto& by_q = cells[{r.p, r.method}];
        if (!by_q.emplace(r.q, &r).second) {
            problems.push_back("duplicate (p=" + std::to_string(r.p) + ", q=" + std::to_string(r.q) +
                               ", " + r.method + ")");
        }
    }
    std::vector<InstanceSummary> out;
    for (const auto& [key, by_q] : cells) {
        std::vector<double> gaps;
        std::vector<double> times;
        for (int q : inner_seeds) {
            auto it = by_q.find(q);
            if (it == by_q.end()) {
                problems.push_back("missing (p=" + std::to_string(key.first) + ", q=" + std::to_string(q) +
                                   ", " + key.second + ")");
                continue;
            }
            gaps.push_back(it->second->gap);
            times.push_back(it->second->time_s);
        }
        if (gaps.size() != inner_seeds.size()) {
            continue;
        }
        InstanceSummary s;
        s.p = key.first;
        s.method = key.second;
        s.median_gap = median(gaps);
        s.mean_gap = mean(gaps);
        s.std_gap = stddev(gaps);
        s.median_time = median(times);
        s.mean_time = mean(times);
        out.push_back(std::move(s));
    }
    if (!problems.empty()) {
        std::string msg = "incomplete run:";
        for (const auto& p : problems) {
            msg += " " + p + ";";
        }
        throw IncompleteRunError(msg);
    }
    return out;
}

double ProfileCurve::at(double tau) const {
    double value = 0.0;
    for (const auto& [x, fraction] : points) {
        if (x > tau) {
            break;
        }
        value = fraction;
    }
    return value;
}

namespace {

std::size_t check_table(const MethodTable& table, const char* what) {
    if (table.empty()) {
        throw ArgumentError(std::string(what) + ": no methods");
    }
    const std::size_t n = table.begin()->second.size();
    if (n == 0) {
        throw ArgumentError(std::string(what) + ": no instances");
    }
    for (const auto& [method, values] : table) {
        if (values.size() != n) {
            throw ArgumentError(std::string(what) + ": method " + method + " has " +
                                std::to_string(values.size()) + " instances, expected " + std::to_string(n));
        }
    }
    return n;
}

std::vector<ProfileCurve> count_profile(const MethodTable& values, std::set<double> breakpoints) {
    std::vector<ProfileCurve> curves;
    for (const auto& [method, xs] : values) {
        ProfileCurve curve;
        curve.method = method;
        std::vector<double> sorted = xs;
        std::sort(sorted.begin(), sorted.end());
        const double n = static_cast<double>(sorted.size());
        for (double tau : breakpoints) {
            const auto count = std::upper_bound(sorted.begin(), sorted.end(), tau) - sorted.begin();
            curve.points.emplace_back(tau, static_cast<double>(count) / n);
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

}  // namespace

std::vector<ProfileCurve> performance_profile(const MethodTable& times) {
    const std::size_t n = check_table(times, "performance_profile");
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    for (const auto& [method, ts] : times) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!(ts[i] > 0.0)) {
                throw ArgumentError("performance_profile: nonpositive time for " + method);
            }
            best[i] = std::min(best[i], ts[i]);
        }
    }
    MethodTable ratios;
    std::set<double> breakpoints;
    for (const auto& [method, ts] : times) {
        auto& r = ratios[method];
        for (std::size_t i = 0; i < n; ++i) {
            r.push_back(ts[i] / best[i]);
            breakpoints.insert(r.back());
        }
    }
    return count_profile(ratios, std::move(breakpoints));
}

std::vector<ProfileCurve> accuracy_profile(const MethodTable& gaps) {
    check_table(gaps, "accuracy_profile");
    std::set<double> breakpoints{0.0};
    for (const auto& [method, gs] : gaps) {
        for (double x : gs) {
            if (x < 0.0) {
                throw ArgumentError("accuracy_profile: negative gap for " + method);
            }
            breakpoints.insert(x);
        }
    }
    return count_profile(gaps, std::move(breakpoints));
}

Dominance compare_points(MethodPoint a, MethodPoint b) {
    const bool a_le = a.time <= b.time && a.gap <= b.gap;
    const bool b_le = b.time <= a.time && b.gap <= a.gap;
    if (a_le && !b_le) {
        return Dominance::Dominates;
    }
    if (b_le && !a_le) {
        return Dominance::Dominated;
    }
    return Dominance::Neither;
}

DominanceReport pareto_dominance(const std::map<std::string, std::map<std::string, MethodPoint>>& table,
                                 const std::string& reference) {
    DominanceReport report;
    for (const auto& [instance, methods] : table) {
        auto ref = methods.find(reference);
        if (ref == methods.end()) {
            throw ArgumentError("pareto_dominance: instance " + instance + " lacks method " + reference);
        }
        InstanceVerdict verdict;
        verdict.instance = instance;
        verdict.dominates_all = true;
        for (const auto& [method, point] : methods) {
            if (method == reference) {
                continue;
            }
            const Dominance d = compare_points(ref->second, point);
            verdict.versus[method] = d;
            if (d == Dominance::Dominates) {
                ++report.dominated_count[method];
            } else {
                report.dominated_count.try_emplace(method, 0);
                verdict.dominates_all = false;
            }
        }
        if (verdict.versus.empty()) {
            verdict.dominates_all = false;
        }
        report.dominates_all_count += verdict.dominates_all ? 1 : 0;
        report.instances.push_back(std::move(verdict));
    }
    return report;
}

ExperimentConfig::ExperimentConfig() : problem_seeds(30), inner_seeds(5) {
    std::iota(problem_seeds.begin(), problem_seeds.end(), 1);
    std::iota(inner_seeds.begin(), inner_seeds.end(), 1);
}

void ExperimentConfig::validate() const {
    if (problem_seeds.empty() || inner_seeds.empty()) {
        throw ArgumentError("experiment: seed lists must be nonempty");
    }
    for (const auto* seeds : {&problem_seeds, &inner_seeds}) {
        std::vector<int> sorted = *seeds;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ArgumentError("experiment: seed lists must not repeat a seed");
        }
    }
    if (methods.empty()) {
        throw ArgumentError("experiment: no methods selected");
    }
    for (const auto& m : methods) {
        if (m != "sphere" && m != "corridor" && m != "louvain") {
            throw ArgumentError("experiment: unknown method '" + m + "'");
        }
    }
    if (r_max < 1) {
        throw ArgumentError("experiment: r_max must be >= 1");
    }
    if (r_max_divisor && !(*r_max_divisor > 0.0)) {
        throw ArgumentError("experiment: r_max_divisor must be positive");
    }
    if (k < 2) {
        throw ArgumentError("experiment: k must be >= 2");
    }
    if (workers < 1) {
        throw ArgumentError("experiment: workers must be >= 1");
    }
}

namespace {

using Clock = std::chrono::steady_clock;

struct MethodOutcome {
    double cost = 0.0;
    std::size_t tasks = 0;
    bool fallback = false;
};

MethodOutcome run_method(const Graph& g, const std::string& method, NodeId s, NodeId t, int q, int r_max,
                         const ExperimentConfig& cfg) {
    const auto seed = static_cast<std::uint64_t>(q);
    if (method == "sphere") {
        PartitionConfig pc;
        pc.r_max = r_max;
        pc.rng_seed = seed;
        auto result = route(g, s, t, pc, SolverSpec{}, cfg.workers);
        return {result.route.cost, result.stats.task_count, false};
    }
    if (method == "corridor") {
        const auto k = static_cast<std::uint32_t>(std::min<std::size_t>(cfg.k, g.node_count()));
        auto cells = grow_cells(g, k, seed);
        auto result = corridor_route(g, s, t, cells);
        return {result.path.cost, 1, result.stats.fallback};
    }
    auto communities = louvain(g, seed);
    auto result = louvain_route(g, s, t, communities);
    return {result.path.cost, 1, result.stats.fallback};
}

}  // namespace

std::vector<ExperimentRecord> run_experiment(const Graph& g, const ExperimentConfig& cfg,
                                             const ProgressFn& progress) {
    cfg.validate();
    std::vector<ExperimentRecord> records;
    bool warmed = !cfg.warmup;

    for (int p : cfg.problem_seeds) {
        const auto pair = sample_st(g, static_cast<std::uint64_t>(p));
        int r_max = cfg.r_max;
        if (cfg.r_max_divisor) {
            const double hops = static_cast<double>(hop_distance(g, pair.s, pair.t));
            r_max = std::max(1, static_cast<int>(std::floor(hops / *cfg.r_max_divisor)));
        }

        if (!warmed) {
            dijkstra_full(g, pair.s, pair.t);
            for (const auto& m : cfg.methods) {
                run_method(g, m, pair.s, pair.t, cfg.inner_seeds.front(), r_max, cfg);
            }
            warmed = true;
        }

        auto start = Clock::now();
        const Path optimal = dijkstra_full(g, pair.s, pair.t);
        const double oracle_seconds = std::chrono::duration<double>(Clock::now() - start).count();
        const double oracle = optimal.cost;

        for (int q : cfg.inner_seeds) {
            ExperimentRecord base;
            base.p = p;
            base.q = q;
            base.s = pair.s;
            base.t = pair.t;
            base.oracle = oracle;

            ExperimentRecord exact = base;
            exact.method = "dijkstra";
            exact.cost = oracle;
            exact.gap = 0.0;
            exact.time_s = oracle_seconds;
            exact.tasks = 1;
            records.push_back(exact);
            if (progress) {
                progress(records.back());
            }

            for (const auto& m : cfg.methods) {
                ExperimentRecord rec = base;
                rec.method = m;
                start = Clock::now();
                const MethodOutcome outcome = run_method(g, m, pair.s, pair.t, q, r_max, cfg);
                rec.time_s = std::chrono::duration<double>(Clock::now() - start).count();
                rec.cost = outcome.cost;
                rec.gap = gap(outcome.cost, oracle);
                rec.tasks = outcome.tasks;
                rec.fallback = outcome.fallback;
                records.push_back(std::move(rec));
                if (progress) {
                    progress(records.back());
                }
            }
        }
    }
    return records;
}
std::map<std::string, std::map<std::string, MethodPoint>> pareto_table(std::span<const InstanceSummary> summaries,
                                                                       bool use_median, const std::string& exclude) {
    std::map<std::string, std::map<std::string, MethodPoint>> table;
    for (const auto& s : summaries) {
        if (s.method == exclude) {
            continue;
        }
        char name[32];
        std::snprintf(name, sizeof(name), "P%02d", s.p);
        table[name][s.method] = use_median ? MethodPoint{s.median_time, s.median_gap}
                                           : MethodPoint{s.mean_time, s.mean_gap};
    }
    return table;
}

namespace {

MethodTable summary_table(std::span<const InstanceSummary> summaries, bool use_median, bool time) {
    std::map<std::string, std::map<int, double>> by_method;
    std::set<int> instances;
    for (const auto& s : summaries) {
        const double value = time ? (use_median ? s.median_time : s.mean_time)
                                  : (use_median ? s.median_gap : s.mean_gap);
        by_method[s.method][s.p] = value;
        instances.insert(s.p);
    }
    MethodTable table;
    for (const auto& [method, values] : by_method) {
        if (values.size() != instances.size()) {
            throw ArgumentError("summary table: method " + method + " is missing instances");
        }
        auto& column = table[method];
        for (const auto& [p, v] : values) {
            column.push_back(v);
        }
    }
    return table;
}

}  // namespace

MethodTable time_table(std::span<const InstanceSummary> summaries, bool use_median) {
    return summary_table(summaries, use_median, true);
}

MethodTable gap_table(std::span<const InstanceSummary> summaries, bool use_median) {
    return summary_table(summaries, use_median, false);
}

std::vector<ProfileRow> build_profiles(std::span<const InstanceSummary> summaries) {
    std::vector<ProfileRow> rows;
    for (bool use_median : {true, false}) {
        const char* basis = use_median ? "median" : "mean";
        for (auto& curve : performance_profile(time_table(summaries, use_median))) {
            rows.push_back({"runtime", basis, std::move(curve)});
        }
        for (auto& curve : accuracy_profile(gap_table(summaries, use_median))) {
            rows.push_back({"accuracy", basis, std::move(curve)});
        }
    }
    return rows;
}

}  // namespace sphere
