#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphere::cli {

/// Bad flag or flag value; maps to exit code 1.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad config file or environment value; maps to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Source { Default, File, Env, Flag };

/// Raw string settings keyed by long flag name, remembering where each came from.
class Layers {
  public:
    Layers();

    /// Flat `key = value` lines; `#` starts a comment. Throws sphere::IoError
    /// if the file cannot be read, ConfigError on malformed lines or unknown keys.
    void load_file(const std::string& path);
    /// SPHERE_<KEY> with dashes as underscores, e.g. SPHERE_R_MAX.
    void load_env();
    void set_flag(const std::string& key, const std::string& value);

    const std::string& value(const std::string& key) const;
    Source source(const std::string& key) const;
    const std::map<std::string, std::string>& values() const { return values_; }

    static const std::vector<std::string>& known_keys();

  private:
    std::map<std::string, std::string> values_;
    std::map<std::string, Source> sources_;
};

struct CliConfig {
    std::string graph;
    std::optional<std::uint32_t> s;  // 1-based
    std::optional<std::uint32_t> t;  // 1-based
    int r_max = 1800;
    std::optional<double> r_max_divisor;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::string solver = "dijkstra";
    std::string method = "dijkstra";
    std::uint32_t k = 64;
    std::vector<int> problem_seeds;
    std::vector<int> inner_seeds;
    std::vector<std::string> methods;
    std::string output_dir = ".";
    std::string emit_path;
    std::string records;
    std::string out;
    bool largest_component = false;
    bool use_cache = true;
    bool warmup = true;
    bool json = false;
    bool quiet = false;

    /// Resolved key/value view, echoed into output metadata.
    std::map<std::string, std::string> resolved;

    std::uint64_t hash() const;

    /// Parses typed values; errors name the key and are reported as
    /// UsageError for flags and ConfigError for file/env values.
    static CliConfig resolve(const Layers& layers);
};

/// "1-30", "1,2,5" or "1-3,7".
std::vector<int> parse_seed_list(const std::string& text);

}  // namespace sphere::cli
