#include "cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "sphere/error.hpp"
#include "sphere/hash.hpp"

namespace sphere::cli {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::string default_workers() {
    return std::to_string(std::max(1U, std::thread::hardware_concurrency()));
}

const std::map<std::string, std::string>& defaults() {
    static const std::map<std::string, std::string> table = {
        {"graph", ""},
        {"s", ""},
        {"t", ""},
        {"r-max", "1800"},
        {"r-max-divisor", ""},
        {"seed", "1"},
        {"workers", default_workers()},
        {"solver", "dijkstra"},
        {"method", "dijkstra"},
        {"k", "64"},
        {"problem-seeds", "1-30"},
        {"inner-seeds", "1-5"},
        {"methods", "sphere,corridor,louvain"},
        {"output-dir", "."},
        {"emit-path", ""},
        {"records", ""},
        {"out", ""},
        {"largest-component", "false"},
        {"cache", "true"},
        {"warmup", "true"},
        {"json", "false"},
        {"quiet", "false"},
    };
    return table;
}

std::string env_name(const std::string& key) {
    std::string name = "SPHERE_";
    for (char c : key) {
        name.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    return name;
}

std::string normalize_key(std::string key) {
    std::replace(key.begin(), key.end(), '_', '-');
    return key;
}

class Resolver {
  public:
    explicit Resolver(const Layers& layers) : layers_(layers) {}

    [[noreturn]] void fail(const std::string& key, const std::string& why) const {
        const auto src = layers_.source(key);
        const std::string msg = "invalid value '" + layers_.value(key) + "' for " + key + ": " + why;
        if (src == Source::Flag) {
            throw UsageError(msg);
        }
        throw ConfigError(msg);
    }

    template <typename T>
    T integer(const std::string& key, T lo, T hi) const {
        const std::string& text = layers_.value(key);
        T value{};
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            fail(key, "expected an integer");
        }
        if (value < lo || value > hi) {
            fail(key, "out of range");
        }
        return value;
    }

    double real(const std::string& key) const {
        const std::string& text = layers_.value(key);
        char* end = nullptr;
        const double value = std::strtod(text.c_str(), &end);
        if (text.empty() || end != text.c_str() + text.size()) {
            fail(key, "expected a number");
        }
        return value;
    }

    bool boolean(const std::string& key) const {
        std::string text = layers_.value(key);
        std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
        if (text == "true" || text == "1" || text == "yes" || text == "on") {
            return true;
        }
        if (text == "false" || text == "0" || text == "no" || text == "off") {
            return false;
        }
        fail(key, "expected true or false");
    }

    std::vector<int> seeds(const std::string& key) const {
        try {
            return parse_seed_list(layers_.value(key));
        } catch (const std::invalid_argument& e) {
            fail(key, e.what());
        }
    }

    bool empty(const std::string& key) const { return layers_.value(key).empty(); }
    const std::string& text(const std::string& key) const { return layers_.value(key); }

  private:
    const Layers& layers_;
};

}  // namespace

Layers::Layers() {
    for (const auto& [key, value] : defaults()) {
        values_[key] = value;
        sources_[key] = Source::Default;
    }
}

const std::vector<std::string>& Layers::known_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> out;
        for (const auto& [key, value] : defaults()) {
            out.push_back(key);
        }
        return out;
    }();
    return keys;
}

void Layers::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file: " + path);
    }
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        const std::string body = trim(std::string_view(line).substr(0, hash));
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(number) + ": expected key = value");
        }
        const std::string key = normalize_key(trim(std::string_view(body).substr(0, eq)));
        std::string value = trim(std::string_view(body).substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        if (!values_.contains(key)) {
            throw ConfigError(path + ":" + std::to_string(number) + ": unknown key '" + key + "'");
        }
        values_[key] = value;
        sources_[key] = Source::File;
    }
}

void Layers::load_env() {
    for (const auto& key : known_keys()) {
        if (const char* value = std::getenv(env_name(key).c_str())) {
            values_[key] = value;
            sources_[key] = Source::Env;
        }
    }
}

void Layers::set_flag(const std::string& key, const std::string& value) {
    if (!values_.contains(key)) {
        throw UsageError("unknown option --" + key);
    }
    values_[key] = value;
    sources_[key] = Source::Flag;
}

const std::string& Layers::value(const std::string& key) const {
    return values_.at(key);
}

Source Layers::source(const std::string& key) const {
    return sources_.at(key);
}

std::vector<int> parse_seed_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    auto to_int = [](const std::string& s) {
        int value = 0;
        const std::string t = trim(s);
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
        if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
            throw std::invalid_argument("bad seed '" + t + "'");
        }
        return value;
    };
    while (std::getline(ss, item, ',')) {
        if (trim(item).empty()) {
            continue;
        }
        const auto dash = item.find('-', item.find_first_not_of(" \t") + 1);
        if (dash == std::string::npos) {
            out.push_back(to_int(item));
            continue;
        }
        const int lo = to_int(item.substr(0, dash));
        const int hi = to_int(item.substr(dash + 1));
        if (hi < lo) {
            throw std::invalid_argument("empty range '" + trim(item) + "'");
        }
        for (int v = lo; v <= hi; ++v) {
            out.push_back(v);
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("empty seed list");
    }
    return out;
}

std::uint64_t CliConfig::hash() const {
    Fnv1a h;
    for (const auto& [key, value] : resolved) {
        h.add(key);
        h.add("=", 1);
        h.add(value);
        h.add("\n", 1);
    }
    return h.digest();
}

CliConfig CliConfig::resolve(const Layers& layers) {
    const Resolver r(layers);
    CliConfig cfg;
    cfg.graph = r.text("graph");
    if (!r.empty("s")) {
        cfg.s = r.integer<std::uint32_t>("s", 1, UINT32_MAX);
    }
    if (!r.empty("t")) {
        cfg.t = r.integer<std::uint32_t>("t", 1, UINT32_MAX);
    }
    cfg.r_max = r.integer<int>("r-max", 0, INT32_MAX);
    if (!r.empty("r-max-divisor")) {
        cfg.r_max_divisor = r.real("r-max-divisor");
        if (!(*cfg.r_max_divisor > 0.0)) {
            r.fail("r-max-divisor", "must be positive");
        }
    }
    cfg.seed = r.integer<std::uint64_t>("seed", 0, UINT64_MAX);
    cfg.workers = r.integer<unsigned>("workers", 1, 4096);
    cfg.solver = r.text("solver");
    cfg.method = r.text("method");
    if (cfg.method != "dijkstra" && cfg.method != "corridor" && cfg.method != "louvain") {
        r.fail("method", "expected dijkstra, corridor or louvain");
    }
    cfg.k = r.integer<std::uint32_t>("k", 2, UINT32_MAX);
    cfg.problem_seeds = r.seeds("problem-seeds");
    cfg.inner_seeds = r.seeds("inner-seeds");
    {
        std::stringstream ss(r.text("methods"));
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) {
                continue;
            }
            if (item != "sphere" && item != "corridor" && item != "louvain") {
                r.fail("methods", "unknown method '" + item + "'");
            }
            cfg.methods.push_back(item);
        }
        if (cfg.methods.empty()) {
            r.fail("methods", "empty method list");
        }
    }
    cfg.output_dir = r.text("output-dir");
    cfg.emit_path = r.text("emit-path");
    cfg.records = r.text("records");
    cfg.out = r.text("out");
    cfg.largest_component = r.boolean("largest-component");
    cfg.use_cache = r.boolean("cache");
    cfg.warmup = r.boolean("warmup");
    cfg.json = r.boolean("json");
    cfg.quiet = r.boolean("quiet");
    cfg.resolved = layers.values();
    return cfg;
}

}  // namespace sphere::cli
