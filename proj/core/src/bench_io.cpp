#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "sphere/bench.hpp"
#include "sphere/error.hpp"

namespace sphere {

namespace {

constexpr const char* kRecordsHeader = "schema=1,p,q,method,s,t,cost,oracle,gap,time_s,tasks,fallback";

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_metadata(std::ostream& out, const Metadata& meta) {
    out << "# schema=" << kCsvSchema << '\n';
    for (const auto& [key, value] : meta) {
        out << "# " << key << '=' << value << '\n';
    }
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    for (;;) {
        auto comma = line.find(',');
        fields.push_back(line.substr(0, comma));
        if (comma == std::string_view::npos) {
            return fields;
        }
        line.remove_prefix(comma + 1);
    }
}

template <typename T>
T parse_field(std::string_view field, std::size_t line, const char* name) {
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(line, std::string("bad value for ") + name + ": '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

void write_records_csv(std::ostream& out, std::span<const ExperimentRecord> records, const Metadata& meta) {
    write_metadata(out, meta);
    out << kRecordsHeader << '\n';
    for (const auto& r : records) {
        out << kCsvSchema << ',' << r.p << ',' << r.q << ',' << r.method << ',' << (r.s + 1) << ','
            << (r.t + 1) << ',' << format_double(r.cost) << ',' << format_double(r.oracle) << ','
            << format_double(r.gap) << ',' << format_double(r.time_s) << ',' << r.tasks << ','
            << (r.fallback ? 1 : 0) << '\n';
    }
}

std::vector<ExperimentRecord> read_records_csv(std::istream& in) {
    std::vector<ExperimentRecord> records;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_seen) {
            if (line != kRecordsHeader) {
                throw ParseError(line_no, "unexpected records header (want schema=1)");
            }
            header_seen = true;
            continue;
        }
        auto f = split_fields(line);
        if (f.size() != 12) {
            throw ParseError(line_no, "expected 12 fields, got " + std::to_string(f.size()));
        }
        if (parse_field<int>(f[0], line_no, "schema") != kCsvSchema) {
            throw ParseError(line_no, "unsupported schema");
        }
        ExperimentRecord r;
        r.p = parse_field<int>(f[1], line_no, "p");
        r.q = parse_field<int>(f[2], line_no, "q");
        r.method = std::string(f[3]);
        r.s = parse_field<NodeId>(f[4], line_no, "s") - 1;
        r.t = parse_field<NodeId>(f[5], line_no, "t") - 1;
        r.cost = parse_field<double>(f[6], line_no, "cost");
        r.oracle = parse_field<double>(f[7], line_no, "oracle");
        r.gap = parse_field<double>(f[8], line_no, "gap");
        r.time_s = parse_field<double>(f[9], line_no, "time_s");
        r.tasks = parse_field<std::size_t>(f[10], line_no, "tasks");
        r.fallback = parse_field<int>(f[11], line_no, "fallback") != 0;
        records.push_back(std::move(r));
    }
    if (!header_seen) {
        throw ParseError(0, "records file has no header");
    }
    return records;
}

void write_summary_csv(std::ostream& out, std::span<const InstanceSummary> summaries, const Metadata& meta) {
    write_metadata(out, meta);
    out << "p,method,avg_time,avg_gap,median_gap,std_gap,median_time\n";
    for (const auto& s : summaries) {
        out << s.p << ',' << s.method << ',' << format_double(s.mean_time) << ',' << format_double(s.mean_gap)
            << ',' << format_double(s.median_gap) << ',' << format_double(s.std_gap) << ','
            << format_double(s.median_time) << '\n';
    }
}

void write_profiles_csv(std::ostream& out, std::span<const ProfileRow> rows, const Metadata& meta) {
    write_metadata(out, meta);
    out << "kind,basis,method,tau,fraction\n";
    for (const auto& row : rows) {
        for (const auto& [tau, fraction] : row.curve.points) {
            out << row.kind << ',' << row.basis << ',' << row.curve.method << ',' << format_double(tau) << ','
                << format_double(fraction) << '\n';
        }
    }
}

}  // namespace sphere
