#pragma once

#include <string>
#include <vector>

namespace fluxlat {

/// One sweep axis. `values` holds the numeric grid; categorical axes (e.g.
/// leakage source states) carry a label per grid level in `labels`.
struct SweepAxis {
    std::string name;
    std::vector<double> values;
    std::vector<std::string> labels;

    long size() const { return static_cast<long>(labels.empty() ? values.size() : labels.size()); }
};

/// Grid of named metric arrays over one or more axes, flattened outer axis
/// first. Failed grid points hold NaN (serialized as "nan" / null).
/// wall_time_ms is diagnostic only and never serialized, keeping reruns of
/// the same config byte-identical.
struct SweepResult {
    std::string scenario;
    std::vector<SweepAxis> axes;
    std::vector<std::string> value_names;
    std::vector<std::vector<double>> values;  // [value_names index][flat point]
    std::string config_hash;
    std::string code_version;
    double wall_time_ms = 0.0;

    long points() const;
    /// Axis level indices of a flat point, outer axis first.
    std::vector<long> indices(long flat) const;
    std::vector<double>& column(const std::string& name);  // adds if missing
};

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

/// FNV-1a 64-bit hash of a byte string, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

void write_csv(const SweepResult& r, const std::string& path);
void write_json(const SweepResult& r, const std::string& path);

/// Inverse of write_json, exact to the bit for finite values and NaN.
SweepResult read_json(const std::string& path);

/// CSV round-trip support: a raw table view of a CSV file (leading comment
/// line + header + string cells) that re-serializes byte-identically.
struct CsvTable {
    std::string comment;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
CsvTable read_csv(const std::string& path);
void write_csv(const CsvTable& t, const std::string& path);

}  // namespace fluxlat
