#include "beccsim/csv.hpp"
#include "beccsim/engine.hpp"
#include "beccsim/experiments.hpp"
#include "beccsim/metrics.hpp"
#include "beccsim/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace beccsim;

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::string protocol;
    std::optional<std::uint64_t> seed;
    std::string rounds;
    std::optional<int> replicates;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_protocol)
{
    cmd->add_option("--config", args.config_path, "scenario config file (applied over defaults)");
    cmd->add_option("--out-dir", args.out_dir, "directory for CSV and config outputs");
    if (with_protocol) {
        cmd->add_option("--protocol", args.protocol, "LEACH, LEACH-E, SEP, SEP-M or BECC");
    }
    cmd->add_option("--seed", args.seed, "base random seed");
    cmd->add_option("--rounds", args.rounds, "round budget, a count or 'unlimited'");
    cmd->add_option("--replicates", args.replicates, "independent runs per configuration");
}

ScenarioConfig resolve_config(const CommonArgs& args, const ScenarioConfig& defaults)
{
    ScenarioConfig cfg = defaults;
    if (!args.config_path.empty()) {
        cfg = parse_config_file(args.config_path, cfg);
    }
    if (!args.protocol.empty()) {
        const auto p = protocol_from_string(args.protocol);
        if (!p) {
            throw std::invalid_argument("unknown protocol '" + args.protocol + "'");
        }
        cfg.protocol = *p;
    }
    if (args.seed) {
        cfg.seed = *args.seed;
    }
    if (!args.rounds.empty()) {
        if (args.rounds == "unlimited") {
            cfg.round_budget.reset();
        } else {
            try {
                cfg.round_budget = std::stol(args.rounds);
            } catch (const std::exception&) {
                throw std::invalid_argument("--rounds expects a count or 'unlimited'");
            }
        }
    }
    if (args.replicates) {
        cfg.replicates = *args.replicates;
    }
    for (const std::string& warning : cfg.validate()) {
        std::cerr << "warning: " << warning << "\n";
    }
    return cfg;
}

std::vector<double> parse_grid(const std::string& text)
{
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3) {
        throw std::invalid_argument("--grid expects start:stop:step");
    }
    return make_grid(start, stop, step);
}

std::filesystem::path prepare_out_dir(const std::string& out_dir)
{
    const std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory '" + out_dir + "': " +
                                 ec.message());
    }
    return dir;
}

void drop_resolved_config(const std::filesystem::path& dir, const ScenarioConfig& cfg)
{
    export_to_file((dir / "resolved_config.ini").string(),
                   [&cfg](std::ostream& out) { write_config(out, cfg); });
}

ScenarioConfig sweep_defaults()
{
    ScenarioConfig cfg;
    cfg.heterogeneity = TwoLevelSpec{1.0, 0.2, 3.0};
    return cfg;
}

int run_simulate(const CommonArgs& args)
{
    const ScenarioConfig cfg = resolve_config(args, ScenarioConfig{});
    const std::filesystem::path dir = prepare_out_dir(args.out_dir);
    drop_resolved_config(dir, cfg);

    const SimulationTrace trace = run_simulation(cfg);
    const std::string series_path = (dir / "series.csv").string();
    export_to_file(series_path, [&trace](std::ostream& out) { write_series_csv(out, trace); });

    long stability = 0;
    long sink_msgs = 0;
    if (!trace.rounds.empty()) {
        const MetricSeries m = extract_metrics(trace);
        stability = m.stability;
        sink_msgs = m.sink_cumulative.back();
    }
    std::cout << to_string(cfg.protocol) << " seed=" << cfg.seed << " rounds="
              << trace.rounds.size() << " stability=" << stability << " sink_msgs=" << sink_msgs
              << " -> " << series_path << "\n";
    return 0;
}

int run_sweep(const CommonArgs& args, const std::string& param, const std::string& grid_text)
{
    const ScenarioConfig cfg = resolve_config(args, sweep_defaults());
    const std::vector<double> grid =
        parse_grid(grid_text.empty() ? (param == "lambda" ? "0.1:0.9:0.1" : "0.5:4.5:0.5")
                                     : grid_text);
    const std::filesystem::path dir = prepare_out_dir(args.out_dir);
    drop_resolved_config(dir, cfg);

    const SweepTable table = param == "lambda" ? run_sweep_lambda(cfg, grid, cfg.replicates)
                                               : run_sweep_alpha(cfg, grid, cfg.replicates);
    const std::string csv_path = (dir / ("sweep_" + param + ".csv")).string();
    export_to_file(csv_path,
                   [&](std::ostream& out) { write_sweep_csv(out, table, cfg); });

    std::cout << "sweep " << param << " points=" << grid.size() << " replicates="
              << cfg.replicates << " runs=" << table.rows.size() << " -> " << csv_path << "\n";
    return 0;
}

int run_multilevel(const CommonArgs& args)
{
    const ScenarioConfig cfg = resolve_config(args, ScenarioConfig{});
    const std::filesystem::path dir = prepare_out_dir(args.out_dir);
    drop_resolved_config(dir, cfg);

    const MultilevelResult result = run_multilevel_experiment(cfg, cfg.replicates);
    const std::string series_path = (dir / "multilevel_series.csv").string();
    const std::string stability_path = (dir / "multilevel_stability.csv").string();
    export_to_file(series_path,
                   [&](std::ostream& out) { write_multilevel_series_csv(out, result, cfg); });
    export_to_file(stability_path,
                   [&](std::ostream& out) { write_multilevel_stability_csv(out, result, cfg); });

    std::cout << "multilevel replicates=" << cfg.replicates << " runs=" << result.runs.size()
              << " -> " << series_path << "\n";
    return 0;
}

int run_validate(const CommonArgs& args)
{
    ScenarioConfig cfg = ScenarioConfig{};
    if (!args.config_path.empty()) {
        cfg = parse_config_file(args.config_path, cfg);
    }
    const std::vector<std::string> warnings = cfg.validate();
    for (const std::string& warning : warnings) {
        std::cout << "warning: " << warning << "\n";
    }
    std::cout << "ok: " << config_summary(cfg) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"deterministic cluster-routing energy simulator"};
    app.set_version_flag("--version", std::string("beccsim ") + kVersion);
    app.require_subcommand(1);

    CommonArgs simulate_args;
    CLI::App* simulate = app.add_subcommand("simulate", "run one scenario and export its series");
    add_common(simulate, simulate_args, true);

    CommonArgs lambda_args;
    std::string lambda_grid;
    CLI::App* sweep_lambda =
        app.add_subcommand("sweep-lambda", "stability over the advanced-fraction grid");
    add_common(sweep_lambda, lambda_args, false);
    sweep_lambda->add_option("--grid", lambda_grid, "start:stop:step (default 0.1:0.9:0.1)");

    CommonArgs alpha_args;
    std::string alpha_grid;
    CLI::App* sweep_alpha =
        app.add_subcommand("sweep-alpha", "stability over the energy-boost grid");
    add_common(sweep_alpha, alpha_args, false);
    sweep_alpha->add_option("--grid", alpha_grid, "start:stop:step (default 0.5:4.5:0.5)");

    CommonArgs multilevel_args;
    CLI::App* multilevel =
        app.add_subcommand("multilevel", "aligned protocol comparison on a multi-level scenario");
    add_common(multilevel, multilevel_args, false);

    CommonArgs validate_args;
    CLI::App* validate = app.add_subcommand("validate-config", "parse and check a config file");
    validate->add_option("--config", validate_args.config_path, "scenario config file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            return run_simulate(simulate_args);
        }
        if (sweep_lambda->parsed()) {
            return run_sweep(lambda_args, "lambda", lambda_grid);
        }
        if (sweep_alpha->parsed()) {
            return run_sweep(alpha_args, "alpha", alpha_grid);
        }
        if (multilevel->parsed()) {
            return run_multilevel(multilevel_args);
        }
        if (validate->parsed()) {
            return run_validate(validate_args);
        }
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::runtime_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
