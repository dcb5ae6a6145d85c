#pragma once

#include "beccsim/config.hpp"
#include "beccsim/metrics.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace beccsim {

struct SweepRow {
    Protocol protocol;
    double value = 0.0; ///< the swept parameter
    std::uint64_t seed = 0;
    long stability = 0;
};

struct SweepTable {
    std::string param_name; ///< "lambda" or "alpha"
    std::vector<SweepRow> rows; ///< ordered by (protocol, value, seed)
};

/// Replicate seeds are base.seed, base.seed+1, ... so a table is a pure
/// function of (base config, grid, replicates).
std::vector<std::uint64_t> replicate_seeds(const ScenarioConfig& base, int replicates);

/// Stability period of LEACH, LEACH-E, SEP and BECC over a lambda grid on
/// a two-level base scenario (base alpha fixed). Rejects multi-level bases.
SweepTable run_sweep_lambda(const ScenarioConfig& base, const std::vector<double>& lambdas,
                            int replicates);

/// Same four protocols over an alpha grid (base lambda fixed).
SweepTable run_sweep_alpha(const ScenarioConfig& base, const std::vector<double>& alphas,
                           int replicates);

struct ProtocolSeries {
    Protocol protocol;
    std::uint64_t seed = 0;
    MetricSeries series;
};

/// Aligned multi-level comparison of LEACH, LEACH-E, SEP-M and BECC: for
/// each replicate seed all four protocols run on identical worlds (same
/// deployment, same energy draws). Rejects two-level bases. Rows ordered by
/// (protocol, seed).
struct MultilevelResult {
    std::vector<ProtocolSeries> runs;
};

MultilevelResult run_multilevel_experiment(const ScenarioConfig& base, int replicates);

/// Protocol sets the experiment recipes compare. SEP belongs to the
/// two-level sweeps, SEP-M to the multi-level comparison.
const std::vector<Protocol>& sweep_protocols();
const std::vector<Protocol>& multilevel_protocols();

/// Evenly spaced grid start, start+step, ..., stop (inclusive, with a small
/// tolerance on the last point).
std::vector<double> make_grid(double start, double stop, double step);

} // namespace beccsim
