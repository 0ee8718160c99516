#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "fluxlat/errors.hpp"
#include "fluxlat/leakage.hpp"
#include "fluxlat/scenarios.hpp"
#include "fluxlat/sweep.hpp"

using namespace fluxlat;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string temp_path(const std::string& name) {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / "fluxlat_sweep_tests";
        std::filesystem::create_directories(d);
        return d;
    }();
    return (dir / name).string();
}

SweepResult sample_result() {
    SweepResult r;
    r.scenario = "unit";
    r.config_hash = "cafe0123cafe0123";
    r.code_version = "0test";
    r.axes = {{"tag", {}, {"a", "b"}}, {"x", {0.5, 1.5, 2.5}, {}}};
    r.column("m") = {1.0, std::numeric_limits<double>::quiet_NaN(), 0.1,
                     4.0, 5.0, 0.05000000000000002};
    return r;
}

const char* czz_config = R"({
  "scenario": "czz-margin",
  "parameters": {
    "f_c1u_01_ghz": 6.7029,
    "f_q_03_ghz": 6.199756,
    "f_c0l_01_ghz": 2.8829,
    "f_q_12_ghz": 3.482923
  }
})";

}  // namespace

TEST_CASE("format_double round-trips bitwise and stays shortest") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 0.05000000000000002, -2.5, 0.0,
                     6.02214076e23}) {
        CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    }
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.05) == "0.05");
    CHECK(format_double(0.05000000000000002) == "0.05000000000000002");
    CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("fnv1a matches the published test vectors") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("a").size() == 16);
    CHECK(fnv1a_hex("config A") != fnv1a_hex("config B"));
}

TEST_CASE("grid flattening is outer-axis first") {
    SweepResult r = sample_result();
    CHECK(r.points() == 6);
    CHECK(r.indices(0) == std::vector<long>{0, 0});
    CHECK(r.indices(2) == std::vector<long>{0, 2});
    CHECK(r.indices(4) == std::vector<long>{1, 1});
    SweepResult empty;
    CHECK(empty.points() == 1);  // an axis-free result is a single row
    r.column("extra").assign(6, 0.0);
    CHECK(r.value_names.back() == "extra");
}

TEST_CASE("csv output is byte-stable and re-serializable") {
    SweepResult r = sample_result();
    const std::string path = temp_path("sample.csv");
    write_csv(r, path);
    CHECK(slurp(path) ==
          "# scenario=unit config_hash=cafe0123cafe0123 code_version=0test\n"
          "tag,x,m\n"
          "a,0.5,1\n"
          "a,1.5,nan\n"
          "a,2.5,0.1\n"
          "b,0.5,4\n"
          "b,1.5,5\n"
          "b,2.5,0.05000000000000002\n");

    CsvTable t = read_csv(path);
    CHECK(t.header == std::vector<std::string>{"tag", "x", "m"});
    REQUIRE(t.rows.size() == 6);
    CHECK(t.rows[1][2] == "nan");
    const std::string copy = temp_path("sample_copy.csv");
    write_csv(t, copy);
    CHECK(slurp(copy) == slurp(path));

    // shape mismatches are caught before anything is written
    r.column("m").pop_back();
    CHECK_THROWS_AS(write_csv(r, temp_path("bad.csv")), Error);
}

TEST_CASE("json output round-trips exactly, wall time excluded") {
    SweepResult r = sample_result();
    r.wall_time_ms = 123.0;  // diagnostic only, must not reach the file
    const std::string path = temp_path("sample.json");
    write_json(r, path);
    const std::string raw = slurp(path);
    CHECK(raw.find("null") != std::string::npos);
    CHECK(raw.find("wall_time") == std::string::npos);

    SweepResult back = read_json(path);
    CHECK(back.scenario == r.scenario);
    CHECK(back.config_hash == r.config_hash);
    CHECK(back.code_version == r.code_version);
    CHECK(back.wall_time_ms == 0.0);
    REQUIRE(back.axes.size() == 2);
    CHECK(back.axes[0].labels == r.axes[0].labels);
    CHECK(back.axes[1].values == r.axes[1].values);
    CHECK(back.value_names == r.value_names);
    REQUIRE(back.values[0].size() == 6);
    for (int i = 0; i < 6; ++i) {
        if (std::isnan(r.values[0][i]))
            CHECK(std::isnan(back.values[0][i]));
        else
            CHECK(back.values[0][i] == r.values[0][i]);
    }
}

TEST_CASE("a valid config parses with its hash attached") {
    ScenarioConfig cfg = parse_config(czz_config);
    CHECK(cfg.scenario == "czz-margin");
    CHECK(cfg.output == "czz-margin");  // defaults to the scenario name
    CHECK(cfg.format == "csv");
    CHECK_FALSE(cfg.plot);
    CHECK(cfg.config_hash == fnv1a_hex(czz_config));
}

TEST_CASE("validation failures are listed exhaustively with field paths") {
    const char* bad = R"({
      "scenario": "czz-margin",
      "outpt": "typo",
      "parameters": {
        "f_c1u_01": 6.7,
        "f_q_03_ghz": 6.2,
        "f_c0l_01_ghz": 2.9,
        "f_q_12_ghz": -3.5
      }
    })";
    std::string what;
    try {
        parse_config(bad);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        what = e.what();
    }
    CHECK(what.find("config validation failed") != std::string::npos);
    CHECK(what.find("$.outpt: unknown key") != std::string::npos);
    // the unit-suffix rule: the bare key is unknown AND the suffixed one missing
    CHECK(what.find("parameters.f_c1u_01: unknown key") != std::string::npos);
    CHECK(what.find("parameters.f_c1u_01_ghz: required key missing") !=
          std::string::npos);
    CHECK(what.find("f_q_12_ghz") != std::string::npos);
    int problems = 0;
    for (size_t pos = 0; (pos = what.find("\n  ", pos)) != std::string::npos; ++pos)
        ++problems;
    CHECK(problems >= 4);
}

TEST_CASE("malformed configs raise focused errors") {
    CHECK_THROWS_WITH_AS(parse_config("{ nope"),
                         doctest::Contains("config is not valid JSON"),
                         ValidationError);
    std::string what;
    try {
        parse_config(R"({"scenario": "bogus", "parameters": {}})");
    } catch (const ValidationError& e) {
        what = e.what();
    }
    CHECK(what.find("$.scenario: unknown scenario 'bogus'") != std::string::npos);
    try {
        parse_config(R"({"scenario": "czz-margin"})");
    } catch (const ValidationError& e) {
        what = e.what();
    }
    CHECK(what.find("$.parameters: required key missing") != std::string::npos);
}

TEST_CASE("the config hash tracks the raw bytes") {
    ScenarioConfig a = parse_config(czz_config);
    std::string tweaked = czz_config;
    tweaked.replace(tweaked.find("6.7029"), 6, "6.7030");
    ScenarioConfig b = parse_config(tweaked);
    CHECK(a.config_hash != b.config_hash);
}

TEST_CASE("the margin scenario computes its single row exactly") {
    ScenarioConfig cfg = parse_config(czz_config);
    SweepResult r = run_scenario(cfg);
    CHECK(r.scenario == "czz-margin");
    CHECK(r.config_hash == cfg.config_hash);
    CHECK(r.axes.empty());
    CHECK(r.points() == 1);
    CHECK(r.column("margin_ghz")[0] ==
          czz_resonance_margin(6.7029, 6.199756, 2.8829, 3.482923));
    CHECK(r.column("f_c1u_01_ghz")[0] == 6.7029);
}

TEST_CASE("rerunning a config yields byte-identical output") {
    ScenarioConfig cfg = parse_config(czz_config);
    const std::string p1 = temp_path("det1.csv"), p2 = temp_path("det2.csv");
    write_csv(run_scenario(cfg), p1);
    write_csv(run_scenario(cfg), p2);
    CHECK(slurp(p1) == slurp(p2));
}

TEST_CASE("the schema document names every scenario") {
    const std::string schema = config_schema();
    for (const char* s : {"ftf-sweep", "nnn-sweep", "cqcq-zz", "analytic-vs-numeric",
                          "squares-sweep", "spectator-error", "leakage-map",
                          "parasitic-drive", "czz-margin"}) {
        CHECK(schema.find(s) != std::string::npos);
    }
    CHECK(schema.back() == '\n');
}
