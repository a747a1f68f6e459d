#include "sphere/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "sphere/error.hpp"
#include "sphere/rng.hpp"

namespace sphere::synthetic {

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1), 1.0});
    }
    return Graph::from_edges(n, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols, double min_weight, double max_weight, std::uint64_t seed) {
    if (rows == 0 || cols == 0) {
        throw ArgumentError("grid_graph: empty grid");
    }
    Rng rng(seed);
    auto weight = [&] { return max_weight > min_weight ? rng.uniform(min_weight, max_weight) : min_weight; };
    std::vector<Edge> edges;
    edges.reserve(2 * rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto id = static_cast<NodeId>(r * cols + c);
            if (c + 1 < cols) {
                edges.push_back({id, id + 1, weight()});
            }
            if (r + 1 < rows) {
                edges.push_back({id, static_cast<NodeId>(id + cols), weight()});
            }
        }
    }
    return Graph::from_edges(rows * cols, edges);
}

Graph random_geometric_graph(std::size_t n, std::uint64_t seed) {
    if (n < 2) {
        throw ArgumentError("random_geometric_graph: need at least two points");
    }
    Rng rng(seed);
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = rng.uniform01();
        ys[i] = rng.uniform01();
    }
    // 1.5x the connectivity threshold sqrt(ln n / (pi n)).
    const double radius =
        1.5 * std::sqrt(std::log(static_cast<double>(n)) / (std::numbers::pi * static_cast<double>(n)));
    const auto buckets = std::max<std::size_t>(1, static_cast<std::size_t>(1.0 / radius));
    std::vector<std::vector<NodeId>> grid(buckets * buckets);
    auto bucket_of = [&](double x) { return std::min(buckets - 1, static_cast<std::size_t>(x * buckets)); };
    for (std::size_t i = 0; i < n; ++i) {
        grid[bucket_of(xs[i]) * buckets + bucket_of(ys[i])].push_back(static_cast<NodeId>(i));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        const auto bx = bucket_of(xs[i]);
        const auto by = bucket_of(ys[i]);
        for (std::size_t gx = bx == 0 ? 0 : bx - 1; gx <= std::min(buckets - 1, bx + 1); ++gx) {
            for (std::size_t gy = by == 0 ? 0 : by - 1; gy <= std::min(buckets - 1, by + 1); ++gy) {
                for (NodeId j : grid[gx * buckets + gy]) {
                    if (j <= i) {
                        continue;
                    }
                    const double d = std::hypot(xs[i] - xs[j], ys[i] - ys[j]);
                    if (d < radius && d > 0.0) {
                        edges.push_back({static_cast<NodeId>(i), j, d});
                    }
                }
            }
        }
    }
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) {
        return g;
    }
    return largest_component(g).graph();
}

Graph random_connected_graph(std::size_t n, std::size_t extra_edges, std::uint64_t seed, int max_weight) {
    if (n == 0) {
        throw ArgumentError("random_connected_graph: empty graph");
    }
    Rng rng(seed);
    auto weight = [&] { return static_cast<double>(1 + rng.uniform_below(static_cast<std::uint64_t>(max_weight))); };
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) {
        edges.push_back({static_cast<NodeId>(rng.uniform_below(v)), static_cast<NodeId>(v), weight()});
    }
    const std::size_t max_edges = n * (n - 1) / 2;
    for (std::size_t i = 0; i < extra_edges && edges.size() < max_edges; ++i) {
        const auto u = static_cast<NodeId>(rng.uniform_below(n));
        const auto v = static_cast<NodeId>(rng.uniform_below(n));
        if (u != v) {
            edges.push_back({u, v, weight()});
        }
    }
    return Graph::from_edges(n, edges);
}

Graph Figure2::graph() {
    const std::vector<Edge> edges = {
        {s, u2, 1.0}, {s, u3, 1.0},       {u2, a, 1.0},  {u3, a, 1.0}, {u2, a_prime, 1.0},
        {a, u5, 1.0}, {a_prime, u5, 1.0}, {u5, u6, 1.0}, {u5, t, 1.0}, {u6, t, 1.0},
    };
    return Graph::from_edges(8, edges);
}

}  // namespace sphere::synthetic
