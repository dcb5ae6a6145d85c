#include "beccsim/experiments.hpp"

#include "beccsim/engine.hpp"

#include <cmath>
#include <stdexcept>

namespace beccsim {

namespace {

SweepTable run_two_level_sweep(const ScenarioConfig& base, const std::string& param_name,
                               const std::vector<double>& grid, int replicates)
{
    if (!base.two_level()) {
        throw std::invalid_argument(param_name + " sweep needs a two-level base scenario");
    }
    if (grid.empty()) {
        throw std::invalid_argument(param_name + " sweep needs a non-empty grid");
    }
    const std::vector<std::uint64_t> seeds = replicate_seeds(base, replicates);

    SweepTable table;
    table.param_name = param_name;
    table.rows.reserve(sweep_protocols().size() * grid.size() * seeds.size());
    for (const Protocol protocol : sweep_protocols()) {
        for (const double value : grid) {
            for (const std::uint64_t seed : seeds) {
                ScenarioConfig cfg = base;
                auto spec = std::get<TwoLevelSpec>(cfg.heterogeneity);
                if (param_name == "lambda") {
                    spec.lambda = value;
                } else {
                    spec.alpha = value;
                }
                cfg.heterogeneity = spec;
                cfg.protocol = protocol;
                cfg.seed = seed;
                const SimulationTrace trace = run_simulation(cfg);
                table.rows.push_back({protocol, value, seed, stability_period(trace)});
            }
        }
    }
    return table;
}

} // namespace

std::vector<std::uint64_t> replicate_seeds(const ScenarioConfig& base, int replicates)
{
    if (replicates <= 0) {
        throw std::invalid_argument("replicates must be positive");
    }
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(replicates));
    for (int k = 0; k < replicates; ++k) {
        seeds[static_cast<std::size_t>(k)] = base.seed + static_cast<std::uint64_t>(k);
    }
    return seeds;
}

SweepTable run_sweep_lambda(const ScenarioConfig& base, const std::vector<double>& lambdas,
                            int replicates)
{
    return run_two_level_sweep(base, "lambda", lambdas, replicates);
}

SweepTable run_sweep_alpha(const ScenarioConfig& base, const std::vector<double>& alphas,
                           int replicates)
{
    return run_two_level_sweep(base, "alpha", alphas, replicates);
}

MultilevelResult run_multilevel_experiment(const ScenarioConfig& base, int replicates)
{
    if (!base.multi_level()) {
        throw std::invalid_argument("multilevel comparison needs a multi-level base scenario");
    }
    const std::vector<std::uint64_t> seeds = replicate_seeds(base, replicates);

    // World construction draws positions and energies before any election
    // randomness, so for a given seed every protocol sees the same network.
    MultilevelResult result;
    result.runs.reserve(multilevel_protocols().size() * seeds.size());
    for (const Protocol protocol : multilevel_protocols()) {
        for (const std::uint64_t seed : seeds) {
            ScenarioConfig cfg = base;
            cfg.protocol = protocol;
            cfg.seed = seed;
            const SimulationTrace trace = run_simulation(cfg);
            result.runs.push_back({protocol, seed, extract_metrics(trace)});
        }
    }
    return result;
}

const std::vector<Protocol>& sweep_protocols()
{
    static const std::vector<Protocol> protocols = {Protocol::Leach, Protocol::LeachE,
                                                    Protocol::Sep, Protocol::Becc};
    return protocols;
}

const std::vector<Protocol>& multilevel_protocols()
{
    static const std::vector<Protocol> protocols = {Protocol::Leach, Protocol::LeachE,
                                                    Protocol::SepM, Protocol::Becc};
    return protocols;
}

std::vector<double> make_grid(double start, double stop, double step)
{
    if (!(step > 0.0)) {
        throw std::invalid_argument("grid step must be positive");
    }
    if (stop < start) {
        throw std::invalid_argument("grid stop must be >= start");
    }
    std::vector<double> grid;
    const double tol = step * 1e-6;
    for (int i = 0;; ++i) {
        const double value = start + i * step;
        if (value > stop + tol) {
            break;
        }
        grid.push_back(value);
    }
    return grid;
}

} // namespace beccsim
