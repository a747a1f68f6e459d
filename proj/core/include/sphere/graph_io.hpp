#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sphere/graph.hpp"

namespace sphere {

struct DimacsStats {
    std::size_t declared_arcs = 0;
    std::size_t arc_lines = 0;
    /// Pairs listed with different weights; the minimum was kept.
    std::size_t weight_conflicts = 0;
    /// `a u u w` lines; dropped since they never lie on a shortest path.
    std::size_t self_loops = 0;
};

struct DimacsGraph {
    Graph graph;
    DimacsStats stats;
};

/// Parses a DIMACS shortest-path `.gr` text. Ids are converted to 0-based.
/// Throws ParseError naming the offending line.
DimacsGraph parse_dimacs_gr(std::string_view text);
DimacsGraph parse_dimacs_gr(std::istream& in);

/// Writes both arcs of every edge with 1-based ids. Integral weights are
/// printed without a fractional part; others with full precision.
void write_dimacs_gr(std::ostream& out, const Graph& g, std::string_view comment = {});

/// Reads a whole file, transparently decompressing gzip input.
std::string read_file_bytes(const std::filesystem::path& path);

// Binary cache layout (little-endian host order):
//   "SPHGRPH\0" | u32 version | u64 source_hash | u64 n | u64 arcs
//   | u64 offsets[n+1] | u32 targets[arcs] | f64 weights[arcs]
inline constexpr std::uint32_t kGraphCacheVersion = 1;

void write_graph_cache(const std::filesystem::path& path, const Graph& g, std::uint64_t source_hash);

/// Returns nullopt if the file is missing, malformed, from another version,
/// or was built from a different source hash.
std::optional<Graph> read_graph_cache(const std::filesystem::path& path, std::uint64_t source_hash);

struct LoadOptions {
    bool use_cache = true;
    bool largest_component = false;
};

struct LoadedGraph {
    Graph graph;
    DimacsStats stats;
    /// FNV-1a of the raw source bytes.
    std::uint64_t source_hash = 0;
    bool from_cache = false;
    /// Maps ids of `graph` back to ids of the file when a component was extracted.
    std::vector<NodeId> to_file_id;

    NodeId file_id(NodeId v) const { return to_file_id.empty() ? v : to_file_id[v]; }
    std::optional<NodeId> from_file_id(NodeId v) const;
};

/// Loads a `.gr` or `.gr.gz` file, consulting `<path>.cache` when enabled.
LoadedGraph load_graph(const std::filesystem::path& path, const LoadOptions& options = {});

}  // namespace sphere
