#pragma once

#include <string>

#include "json.hpp"

#include "fluxlat/sweep.hpp"

namespace fluxlat {

using ordered_json = nlohmann::ordered_json;

/// Parsed and schema-checked scenario configuration. `parameters` keeps the
/// validated scenario-specific table; config_hash fingerprints the raw bytes
/// the config was read from, so any textual change shows up in the outputs.
struct ScenarioConfig {
    std::string scenario;
    std::string output;  // file prefix for results and plots
    std::string format = "csv";
    bool plot = false;
    ordered_json parameters;
    std::string config_hash;
};

/// Parse a config document. The whole schema is checked before returning:
/// every violation is collected with its field path and reported in one
/// ValidationError, not just the first.
ScenarioConfig parse_config(const std::string& raw_bytes);

/// Human- and machine-readable description of the accepted config layout,
/// one JSON document (printed by `fluxlat schema`).
std::string config_schema();

/// Execute a parsed scenario. threads <= 0 resolves the worker count from
/// FLUXLAT_THREADS or the hardware. Numerical failures inside individual
/// grid points become NaN cells; failures that invalidate the whole run
/// (unreachable tuning targets, broken models) propagate as exceptions.
SweepResult run_scenario(const ScenarioConfig& cfg, int threads = 0);

}  // namespace fluxlat
