#include "fluxlat/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fluxlat/errors.hpp"

namespace fluxlat {

using ordered_json = nlohmann::ordered_json;

long SweepResult::points() const {
    long n = 1;
    for (const auto& a : axes) n *= a.size();
    return n;
}

std::vector<long> SweepResult::indices(long flat) const {
    std::vector<long> idx(axes.size(), 0);
    for (int i = static_cast<int>(axes.size()) - 1; i >= 0; --i) {
        idx[i] = flat % axes[i].size();
        flat /= axes[i].size();
    }
    return idx;
}

std::vector<double>& SweepResult::column(const std::string& name) {
    for (size_t i = 0; i < value_names.size(); ++i)
        if (value_names[i] == name) return values[i];
    value_names.push_back(name);
    values.emplace_back();
    values.back().reserve(points());
    return values.back();
}

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[h & 0xf];
        h >>= 4;
    }
    return std::string(buf, 16);
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    return out;
}

void check_shapes(const SweepResult& r) {
    for (size_t i = 0; i < r.values.size(); ++i)
        if (static_cast<long>(r.values[i].size()) != r.points())
            throw Error("sweep column '" + r.value_names[i] + "' has " +
                        std::to_string(r.values[i].size()) + " entries, grid has " +
                        std::to_string(r.points()));
}

}  // namespace

void write_csv(const SweepResult& r, const std::string& path) {
    check_shapes(r);
    std::ofstream out = open_out(path);
    out << "# scenario=" << r.scenario << " config_hash=" << r.config_hash
        << " code_version=" << r.code_version << "\n";
    bool first = true;
    for (const auto& a : r.axes) {
        out << (first ? "" : ",") << a.name;
        first = false;
    }
    for (const auto& n : r.value_names) {
        out << (first ? "" : ",") << n;
        first = false;
    }
    out << "\n";
    const long npts = r.points();
    for (long flat = 0; flat < npts; ++flat) {
        std::vector<long> idx = r.indices(flat);
        first = true;
        for (size_t ax = 0; ax < r.axes.size(); ++ax) {
            const auto& a = r.axes[ax];
            out << (first ? "" : ",");
            first = false;
            if (!a.labels.empty())
                out << a.labels[idx[ax]];
            else
                out << format_double(a.values[idx[ax]]);
        }
        for (const auto& col : r.values) {
            out << (first ? "" : ",") << format_double(col[flat]);
            first = false;
        }
        out << "\n";
    }
    if (!out) throw Error("write failed: " + path);
}

namespace {

ordered_json doubles_to_json(const std::vector<double>& v) {
    ordered_json arr = ordered_json::array();
    for (double x : v) {
        if (std::isnan(x))
            arr.push_back(nullptr);
        else
            arr.push_back(x);
    }
    return arr;
}

std::vector<double> json_to_doubles(const ordered_json& arr) {
    std::vector<double> out;
    for (const auto& x : arr) out.push_back(x.is_null() ? std::nan("") : x.get<double>());
    return out;
}

}  // namespace

void write_json(const SweepResult& r, const std::string& path) {
    check_shapes(r);
    ordered_json j;
    j["scenario"] = r.scenario;
    j["metadata"] = {{"config_hash", r.config_hash}, {"code_version", r.code_version}};
    j["axes"] = ordered_json::array();
    for (const auto& a : r.axes) {
        ordered_json ja;
        ja["name"] = a.name;
        ja["values"] = doubles_to_json(a.values);
        if (!a.labels.empty()) ja["labels"] = a.labels;
        j["axes"].push_back(ja);
    }
    j["values"] = ordered_json::object();
    for (size_t i = 0; i < r.value_names.size(); ++i)
        j["values"][r.value_names[i]] = doubles_to_json(r.values[i]);

    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
    if (!out) throw Error("write failed: " + path);
}

SweepResult read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open: " + path);
    ordered_json j = ordered_json::parse(in);

    SweepResult r;
    r.scenario = j.at("scenario").get<std::string>();
    r.config_hash = j.at("metadata").at("config_hash").get<std::string>();
    r.code_version = j.at("metadata").at("code_version").get<std::string>();
    for (const auto& ja : j.at("axes")) {
        SweepAxis a;
        a.name = ja.at("name").get<std::string>();
        a.values = json_to_doubles(ja.at("values"));
        if (ja.contains("labels")) a.labels = ja.at("labels").get<std::vector<std::string>>();
        r.axes.push_back(std::move(a));
    }
    for (const auto& [name, arr] : j.at("values").items()) {
        r.value_names.push_back(name);
        r.values.push_back(json_to_doubles(arr));
    }
    return r;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open: " + path);
    CsvTable t;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!have_header && line.rfind("# ", 0) == 0 && t.comment.empty()) {
            t.comment = line;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.push_back("");
        if (!have_header) {
            t.header = std::move(cells);
            have_header = true;
        } else {
            t.rows.push_back(std::move(cells));
        }
    }
    return t;
}

void write_csv(const CsvTable& t, const std::string& path) {
    std::ofstream out = open_out(path);
    if (!t.comment.empty()) out << t.comment << "\n";
    auto put_row = [&out](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << "\n";
    };
    put_row(t.header);
    for (const auto& row : t.rows) put_row(row);
    if (!out) throw Error("write failed: " + path);
}

}  // namespace fluxlat
