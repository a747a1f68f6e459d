#pragma once

#include <cstdint>

#include "sphere/graph.hpp"

namespace sphere::synthetic {

/// 0 - 1 - ... - (n-1) with unit weights.
Graph path_graph(std::size_t n);

/// rows x cols 4-neighbor grid; node (r, c) has id r * cols + c. Unit weights
/// when `max_weight` <= `min_weight`, otherwise uniform real weights in
/// [min_weight, max_weight] drawn from `seed`.
Graph grid_graph(std::size_t rows, std::size_t cols, double min_weight = 1.0, double max_weight = 1.0,
                 std::uint64_t seed = 0);

/// Points uniform in the unit square joined when closer than a radius chosen
/// for connectivity; Euclidean weights. Returns the largest component.
Graph random_geometric_graph(std::size_t n, std::uint64_t seed);

/// Random spanning tree plus `extra_edges` chords; integer weights in
/// [1, max_weight], so path sums are exact in double precision.
Graph random_connected_graph(std::size_t n, std::size_t extra_edges, std::uint64_t seed, int max_weight = 10);

/// The eight-node example with terminals s and t whose last nonempty overlap
/// is {a, a'}. Unit weights. Edges: s-u2, s-u3, u2-a, u3-a, u2-a', a-u5,
/// a'-u5, u5-u6, u5-t, u6-t.
struct Figure2 {
    static constexpr NodeId s = 0;
    static constexpr NodeId u2 = 1;
    static constexpr NodeId u3 = 2;
    static constexpr NodeId a = 3;
    static constexpr NodeId a_prime = 4;
    static constexpr NodeId u5 = 5;
    static constexpr NodeId u6 = 6;
    static constexpr NodeId t = 7;

    static Graph graph();
};

}  // namespace sphere::synthetic
