// Command-line front end: runs a configured scenario (or the bundled demo),
// writes the averaged traces as CSV, optionally per-sensor SVG plots, and
// echoes the effective configuration next to them.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "satrack/sim/config.hpp"
#include "satrack/sim/csv.hpp"
#include "satrack/sim/runner.hpp"
#include "satrack/sim/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct Options {
    std::string config_path;
    std::string preset;
    std::string out_dir;
    int runs = -1;
    long long seed = -1;
    bool svg = false;
    int threads = 1;
};

int execute(const Options& opt) {
    satrack::sim::ScenarioConfig cfg;
    try {
        if (!opt.preset.empty()) {
            if (opt.preset != "demo") {
                std::cerr << "error: unknown preset '" << opt.preset
                          << "' (available: demo)\n";
                return kExitConfig;
            }
            cfg = satrack::sim::ScenarioConfig::demo();
        } else {
            cfg = satrack::sim::parse_config(opt.config_path);
        }
        if (opt.runs > 0) cfg.mc_runs = opt.runs;
        if (opt.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opt.seed);
        cfg.validate();
    } catch (const satrack::sim::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create output directory '" << opt.out_dir
                  << "': " << ec.message() << "\n";
        return kExitIo;
    }

    satrack::sim::MonteCarloResult mc;
    try {
        mc = satrack::sim::run_monte_carlo(cfg, opt.threads);
    } catch (const satrack::sim::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: simulation failed: " << e.what() << "\n";
        return kExitConfig;
    }

    const auto out_path = [&](const std::string& name) {
        return (std::filesystem::path(opt.out_dir) / name).string();
    };
    auto write_file = [&](const std::string& name, auto&& writer) -> bool {
        std::ofstream out(out_path(name), std::ios::binary);
        writer(out);
        out.flush();
        if (!out) {
            std::cerr << "error: cannot write '" << out_path(name) << "'\n";
            return false;
        }
        return true;
    };

    if (!write_file("scores.csv",
                    [&](std::ostream& o) { satrack::sim::write_csv(o, mc); }))
        return kExitIo;
    if (!write_file("config_resolved.txt", [&](std::ostream& o) {
            o << satrack::sim::resolved_text(cfg);
        }))
        return kExitIo;
    if (opt.svg) {
        for (int s = 1; s <= cfg.num_sensors; ++s) {
            if (!write_file("scores_" + std::to_string(s) + ".svg",
                            [&](std::ostream& o) {
                                satrack::sim::write_svg(o, mc, cfg, s);
                            }))
                return kExitIo;
        }
    }

    std::cout << "ran " << mc.runs << " run(s), " << cfg.num_steps << " steps, "
              << cfg.num_sensors << " sensor(s) -> " << out_path("scores.csv") << "\n";
    if (mc.runs_with_long_miss > 0)
        std::cout << "note: " << mc.runs_with_long_miss
                  << " run(s) had a sensor unassociated for more than 20 consecutive steps\n";
    if (mc.runs_cov_diverged > 0)
        std::cout << "note: " << mc.runs_cov_diverged
                  << " run(s) exceeded the covariance sanity bound\n";
    if (mc.runs_left_fov > 0)
        std::cout << "note: the object left the field of view in " << mc.runs_left_fov
                  << " run(s)\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-object tracking with online sensor self-assessment"};
    app.require_subcommand(1);

    Options opt;

    auto* run = app.add_subcommand("run", "simulate a scenario from a config file");
    run->add_option("--config", opt.config_path, "scenario config file")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--runs", opt.runs, "override the number of Monte Carlo runs");
    run->add_option("--seed", opt.seed, "override the master seed");
    run->add_option("--out", opt.out_dir, "output directory")->required();
    run->add_flag("--svg", opt.svg, "also write per-sensor SVG plots");
    run->add_option("--threads", opt.threads, "worker threads for the runs");

    auto* preset = app.add_subcommand("preset", "simulate a bundled scenario");
    preset->add_option("name", opt.preset, "preset name (demo)")->required();
    preset->add_option("--runs", opt.runs, "override the number of Monte Carlo runs");
    preset->add_option("--seed", opt.seed, "override the master seed");
    preset->add_option("--out", opt.out_dir, "output directory")->required();
    preset->add_flag("--svg", opt.svg, "also write per-sensor SVG plots");
    preset->add_option("--threads", opt.threads, "worker threads for the runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }
    return execute(opt);
}
