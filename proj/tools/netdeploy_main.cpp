#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "netdeploy/analysis.hpp"
#include "netdeploy/output.hpp"
#include "netdeploy/simulate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitNoTermination = 3;

struct CommonArgs {
    std::string preset_name;
    std::string config_path;
    std::string format = "csv";
    std::string out_path;
    std::optional<std::uint64_t> max_steps;
    std::optional<double> stop_fraction;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--preset", args.preset_name, "preset name (see preset-dump)");
    cmd->add_option("--config", args.config_path, "simulation config JSON file");
    cmd->add_option("--format", args.format, "output format: csv, json, gnuplot")
        ->check(CLI::IsMember({"csv", "json", "gnuplot"}));
    cmd->add_option("--out", args.out_path, "output file (default: standard output)");
    cmd->add_option("--max-steps", args.max_steps, "override the step safety cap");
    cmd->add_option("--stop-fraction", args.stop_fraction, "override the stop fraction");
}

// Loads from --preset or --config and applies overrides. Throws
// std::invalid_argument for usage problems, std::ios_base::failure for I/O.
netdeploy::SimulationConfig load_config(const CommonArgs& args) {
    if (args.preset_name.empty() == args.config_path.empty())
        throw std::invalid_argument("exactly one of --preset and --config is required");
    netdeploy::SimulationConfig config;
    if (!args.preset_name.empty()) {
        config = netdeploy::preset(args.preset_name);
    } else {
        std::ifstream in(args.config_path);
        if (!in) throw std::ios_base::failure("cannot read config file '" + args.config_path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        config = netdeploy::SimulationConfig::from_json(text.str());
    }
    if (args.max_steps) config.max_steps = *args.max_steps;
    if (args.stop_fraction) config.stop_fraction = *args.stop_fraction;
    config.validate();
    return config;
}

int with_output(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    if (path.empty()) {
        writer(std::cout);
        return kExitOk;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return kExitIo;
    }
    writer(out);
    out.flush();
    if (!out) {
        std::cerr << "error: failed while writing '" << path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

int cmd_run(const CommonArgs& args, std::uint64_t seed) {
    netdeploy::SimulationConfig config = load_config(args);
    config.rng_seed = seed;
    const netdeploy::RunResult result = netdeploy::run(config);
    const auto format = netdeploy::output_format_from(args.format);
    const int io_status = with_output(
        args.out_path, [&](std::ostream& out) { netdeploy::write_curve(out, format, result, seed); });
    if (io_status != kExitOk) return io_status;
    if (!result.reached_stop) {
        std::cerr << "run stopped at the step cap (" << config.max_steps << ") with "
                  << result.curve.counts.back() << "/" << config.node_count
                  << " adopted, short of the stop fraction " << config.stop_fraction << "\n";
        return kExitNoTermination;
    }
    return kExitOk;
}

int cmd_ensemble(const CommonArgs& args, std::size_t runs, std::uint64_t seed_stream,
                 unsigned jobs, bool pin_graph, std::uint32_t window, double prominence) {
    netdeploy::SimulationConfig config = load_config(args);
    netdeploy::EnsembleOptions options;
    options.jobs = jobs;
    options.pin_graph = pin_graph;
    std::vector<netdeploy::RunResult> results;
    const netdeploy::EnsembleSummary summary =
        netdeploy::run_ensemble(config, runs, seed_stream, options, &results);
    const std::string label =
        args.preset_name.empty() ? config.digest() : args.preset_name;
    const netdeploy::FeatureReport features =
        netdeploy::analyze_runs(results, config.stop_fraction, {window, prominence}, label);

    const auto format = netdeploy::output_format_from(args.format);
    int io_status = kExitOk;
    switch (format) {
        case netdeploy::OutputFormat::json:
            io_status = with_output(args.out_path, [&](std::ostream& out) {
                netdeploy::write_summary_json(out, summary, features);
            });
            break;
        case netdeploy::OutputFormat::gnuplot:
            io_status = with_output(args.out_path, [&](std::ostream& out) {
                netdeploy::write_summary_gnuplot(out, summary, features);
            });
            break;
        case netdeploy::OutputFormat::csv:
            // Table to the requested sink; the feature report goes to a
            // sibling .features.json file, or follows on stdout.
            io_status = with_output(args.out_path, [&](std::ostream& out) {
                netdeploy::write_summary_csv(out, summary);
            });
            if (io_status == kExitOk) {
                if (args.out_path.empty()) {
                    std::cout << features.to_json(2) << "\n";
                } else {
                    io_status = with_output(args.out_path + ".features.json",
                                            [&](std::ostream& out) {
                                                out << features.to_json(2) << "\n";
                                            });
                }
            }
            break;
    }
    if (io_status != kExitOk) return io_status;
    if (summary.non_terminated > 0) {
        std::cerr << summary.non_terminated << " of " << runs
                  << " runs stopped at the step cap before the stop fraction\n";
        return kExitNoTermination;
    }
    return kExitOk;
}

int cmd_preset_dump(const std::string& name) {
    std::cout << netdeploy::preset(name).to_json();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochastic simulator of technology deployment on networks"};
    app.require_subcommand(1);

    CommonArgs run_args;
    std::uint64_t seed = 0;
    CLI::App* run_cmd = app.add_subcommand("run", "execute one run and write its growth curve");
    add_common(run_cmd, run_args);
    run_cmd->add_option("--seed", seed, "RNG seed for the run");

    CommonArgs ensemble_args;
    std::size_t runs = 30;
    std::uint64_t seed_stream = 0;
    unsigned jobs = 1;
    bool pin_graph = false;
    std::uint32_t window = 11;
    double prominence = 0.25;
    CLI::App* ensemble_cmd =
        app.add_subcommand("ensemble", "run many seeds; write summary table and feature report");
    add_common(ensemble_cmd, ensemble_args);
    ensemble_cmd->add_option("--runs", runs, "number of runs")->check(CLI::PositiveNumber);
    ensemble_cmd->add_option("--seed-stream", seed_stream, "stream key; run i uses a seed derived from (stream, i)");
    ensemble_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    ensemble_cmd->add_flag("--pin-graph", pin_graph, "build one topology for all runs");
    ensemble_cmd->add_option("--window", window, "smoothing window for the feature report (odd)");
    ensemble_cmd->add_option("--prominence", prominence, "burst prominence fraction");

    std::string dump_name;
    CLI::App* dump_cmd = app.add_subcommand("preset-dump", "print a preset as a config JSON file");
    dump_cmd->add_option("name", dump_name, "preset name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_args, seed);
        if (ensemble_cmd->parsed())
            return cmd_ensemble(ensemble_args, runs, seed_stream, jobs, pin_graph, window,
                                prominence);
        if (dump_cmd->parsed()) return cmd_preset_dump(dump_name);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
