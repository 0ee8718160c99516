#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fluxlat/errors.hpp"
#include "fluxlat/plot.hpp"
#include "fluxlat/scenarios.hpp"
#include "fluxlat/sweep.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_command(const std::string& config_path, const std::string& out_dir,
                bool plot_flag, int threads) {
    std::string bytes;
    try {
        bytes = read_file(config_path);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    fluxlat::ScenarioConfig cfg;
    try {
        cfg = fluxlat::parse_config(bytes);
    } catch (const fluxlat::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        fluxlat::SweepResult result = fluxlat::run_scenario(cfg, threads);
        std::filesystem::create_directories(out_dir);
        const std::string base = out_dir + "/" + cfg.output;
        const std::string out_path =
            base + (cfg.format == "json" ? ".json" : ".csv");
        if (cfg.format == "json")
            fluxlat::write_json(result, out_path);
        else
            fluxlat::write_csv(result, out_path);
        std::cout << out_path << "\n";
        if (plot_flag || cfg.plot)
            for (const std::string& p : fluxlat::emit_plots(result, out_dir, cfg.output))
                std::cout << p << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

int validate_command(const std::string& config_path) {
    std::string bytes;
    try {
        bytes = read_file(config_path);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    try {
        fluxlat::parse_config(bytes);
    } catch (const fluxlat::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    std::cout << "ok\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    // grid-level parallelism owns the cores; a threaded BLAS underneath would
    // oversubscribe and break run-to-run determinism
    setenv("OPENBLAS_NUM_THREADS", "1", 1);

    CLI::App app{"lattice spectroscopy and gate-dynamics scenario runner"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    bool plot_flag = false;
    int threads = 0;

    CLI::App* run = app.add_subcommand("run", "execute a scenario config");
    run->add_option("config", config_path, "JSON scenario config")->required();
    run->add_option("--out", out_dir, "output directory (default: .)");
    run->add_flag("--plot", plot_flag, "write SVG plots next to the results");
    run->add_option("--threads", threads,
                    "worker threads (default: FLUXLAT_THREADS, then all cores)");

    std::string validate_path;
    CLI::App* validate =
        app.add_subcommand("validate", "check a config against the schema");
    validate->add_option("config", validate_path, "JSON scenario config")->required();

    CLI::App* schema =
        app.add_subcommand("schema", "print the config schema as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (schema->parsed()) {
        std::cout << fluxlat::config_schema();
        return 0;
    }
    if (validate->parsed()) return validate_command(validate_path);
    return run_command(config_path, out_dir, plot_flag, threads);
}
