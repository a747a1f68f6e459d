#include "sphere/graph_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "sphere/error.hpp"
#include "sphere/hash.hpp"

namespace sphere {

namespace {

class TokenReader {
  public:
    explicit TokenReader(std::string_view line) : rest_(line) {}

    std::string_view next() {
        auto begin = rest_.find_first_not_of(" \t\r");
        if (begin == std::string_view::npos) {
            rest_ = {};
            return {};
        }
        rest_.remove_prefix(begin);
        auto end = rest_.find_first_of(" \t\r");
        auto token = rest_.substr(0, end);
        rest_.remove_prefix(end == std::string_view::npos ? rest_.size() : end);
        return token;
    }

    bool exhausted() { return next().empty(); }

  private:
    std::string_view rest_;
};

template <typename T>
bool parse_number(std::string_view token, T& out) {
    if (token.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

DimacsGraph parse_dimacs_gr(std::string_view text) {
    std::size_t line_no = 0;
    std::uint64_t n = 0;
    bool have_problem = false;
    std::vector<Edge> edges;
    DimacsStats stats;

    while (!text.empty()) {
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;

        TokenReader tokens(line);
        auto kind = tokens.next();
        if (kind.empty() || kind == "c") {
            continue;
        }
        if (kind == "p") {
            if (have_problem) {
                throw ParseError(line_no, "duplicate problem line");
            }
            std::uint64_t m = 0;
            if (tokens.next() != "sp" || !parse_number(tokens.next(), n) ||
                !parse_number(tokens.next(), m) || !tokens.exhausted()) {
                throw ParseError(line_no, "malformed problem line, expected 'p sp <n> <m>'");
            }
            if (n == 0 || n >= kInvalidNode) {
                throw ParseError(line_no, "node count out of range");
            }
            have_problem = true;
            stats.declared_arcs = m;
            edges.reserve(m);
            continue;
        }
        if (kind == "a") {
            if (!have_problem) {
                throw ParseError(line_no, "arc before problem line");
            }
            std::uint64_t u = 0;
            std::uint64_t v = 0;
            double w = 0.0;
            if (!parse_number(tokens.next(), u) || !parse_number(tokens.next(), v) ||
                !parse_number(tokens.next(), w) || !tokens.exhausted()) {
                throw ParseError(line_no, "malformed arc line, expected 'a <u> <v> <w>'");
            }
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError(line_no, "node id out of range 1.." + std::to_string(n));
            }
            if (!(w > 0.0) || !std::isfinite(w)) {
                throw ParseError(line_no, "non-positive weight");
            }
            ++stats.arc_lines;
            if (u == v) {
                ++stats.self_loops;
                continue;
            }
            edges.push_back({static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1), w});
            continue;
        }
        throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
    }
    if (!have_problem) {
        throw ParseError(line_no, "missing problem line");
    }

    DimacsGraph out;
    out.graph = Graph::from_edges(n, edges, &out.stats.weight_conflicts);
    out.stats.declared_arcs = stats.declared_arcs;
    out.stats.arc_lines = stats.arc_lines;
    out.stats.self_loops = stats.self_loops;
    return out;
}

DimacsGraph parse_dimacs_gr(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_dimacs_gr(std::string_view(text));
}

void write_dimacs_gr(std::ostream& out, const Graph& g, std::string_view comment) {
    if (!comment.empty()) {
        out << "c " << comment << '\n';
    }
    out << "p sp " << g.node_count() << ' ' << g.arc_count() << '\n';
    char buf[64];
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto nb = g.neighbors(u);
        auto ws = g.weights(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const double w = ws[i];
            if (w == std::floor(w) && w < 9.0e15) {
                std::snprintf(buf, sizeof(buf), "%.0f", w);
            } else {
                std::snprintf(buf, sizeof(buf), "%.17g", w);
            }
            out << "a " << (u + 1) << ' ' << (nb[i] + 1) << ' ' << buf << '\n';
        }
    }
}

std::string read_file_bytes(const std::filesystem::path& path) {
    gzFile file = gzopen(path.string().c_str(), "rb");
    if (file == nullptr) {
        throw IoError("cannot open " + path.string());
    }
    std::string data;
    char buf[1 << 16];
    for (;;) {
        int got = gzread(file, buf, sizeof(buf));
        if (got < 0) {
            int errnum = 0;
            std::string msg = gzerror(file, &errnum);
            gzclose(file);
            throw IoError("read error in " + path.string() + ": " + msg);
        }
        if (got == 0) {
            break;
        }
        data.append(buf, static_cast<std::size_t>(got));
    }
    gzclose(file);
    return data;
}

namespace {

constexpr char kCacheMagic[8] = {'S', 'P', 'H', 'G', 'R', 'P', 'H', '\0'};

template <typename T>
void write_pod(std::ofstream& out, const T& value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
void write_array(std::ofstream& out, const std::vector<T>& values) {
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size() * sizeof(T)));
}

template <typename T>
bool read_pod(std::ifstream& in, T& value) {
    return static_cast<bool>(in.read(reinterpret_cast<char*>(&value), sizeof(T)));
}

template <typename T>
bool read_array(std::ifstream& in, std::vector<T>& values, std::size_t count) {
    values.resize(count);
    return static_cast<bool>(
        in.read(reinterpret_cast<char*>(values.data()), static_cast<std::streamsize>(count * sizeof(T))));
}

}  // namespace

void write_graph_cache(const std::filesystem::path& path, const Graph& g, std::uint64_t source_hash) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write cache " + path.string());
    }
    out.write(kCacheMagic, sizeof(kCacheMagic));
    write_pod(out, kGraphCacheVersion);
    write_pod(out, source_hash);
    write_pod(out, static_cast<std::uint64_t>(g.node_count()));
    write_pod(out, static_cast<std::uint64_t>(g.arc_count()));
    write_array(out, g.offsets());
    write_array(out, g.targets());
    write_array(out, g.arc_weights());
    if (!out) {
        throw IoError("failed writing cache " + path.string());
    }
}

std::optional<Graph> read_graph_cache(const std::filesystem::path& path, std::uint64_t source_hash) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    char magic[sizeof(kCacheMagic)];
    std::uint32_t version = 0;
    std::uint64_t stored_hash = 0;
    std::uint64_t n = 0;
    std::uint64_t arcs = 0;
    if (!in.read(magic, sizeof(magic)) || !std::equal(magic, magic + sizeof(magic), kCacheMagic) ||
        !read_pod(in, version) || version != kGraphCacheVersion || !read_pod(in, stored_hash) ||
        stored_hash != source_hash || !read_pod(in, n) || !read_pod(in, arcs)) {
        return std::nullopt;
    }
    std::vector<std::uint64_t> offsets;
    std::vector<NodeId> targets;
    std::vector<double> weights;
    if (!read_array(in, offsets, n + 1) || !read_array(in, targets, arcs) ||
        !read_array(in, weights, arcs)) {
        return std::nullopt;
    }
    try {
        return Graph::from_csr(std::move(offsets), std::move(targets), std::move(weights));
    } catch (const ArgumentError&) {
        return std::nullopt;
    }
}

std::optional<NodeId> LoadedGraph::from_file_id(NodeId v) const {
    if (to_file_id.empty()) {
        return graph.contains(v) ? std::optional<NodeId>(v) : std::nullopt;
    }
    auto it = std::lower_bound(to_file_id.begin(), to_file_id.end(), v);
    if (it == to_file_id.end() || *it != v) {
        return std::nullopt;
    }
    return static_cast<NodeId>(it - to_file_id.begin());
}

LoadedGraph load_graph(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream raw(path, std::ios::binary);
    if (!raw) {
        throw IoError("cannot open " + path.string());
    }
    std::string raw_bytes((std::istreambuf_iterator<char>(raw)), std::istreambuf_iterator<char>());
    LoadedGraph loaded;
    loaded.source_hash = fnv1a(raw_bytes);
    raw_bytes.clear();
    raw_bytes.shrink_to_fit();

    auto cache_path = path;
    cache_path += ".cache";
    if (options.use_cache) {
        if (auto cached = read_graph_cache(cache_path, loaded.source_hash)) {
            loaded.graph = std::move(*cached);
            loaded.from_cache = true;
        }
    }
    if (!loaded.from_cache) {
        auto parsed = parse_dimacs_gr(std::string_view(read_file_bytes(path)));
        loaded.graph = std::move(parsed.graph);
        loaded.stats = parsed.stats;
        if (options.use_cache) {
            try {
                write_graph_cache(cache_path, loaded.graph, loaded.source_hash);
            } catch (const IoError&) {
                // Read-only location; loading still succeeded.
            }
        }
    }
    if (options.largest_component && !is_connected(loaded.graph)) {
        auto view = largest_component(loaded.graph);
        loaded.to_file_id.assign(view.parent_ids().begin(), view.parent_ids().end());
        loaded.graph = view.graph();
    }
    return loaded;
}

}  // namespace sphere
