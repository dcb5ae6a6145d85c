#pragma once

#include "beccsim/engine.hpp"

#include <vector>

namespace beccsim {

/// Per-round series plus the headline scalar pulled out of one trace.
struct MetricSeries {
    std::vector<int> alive;            ///< alive count after each round
    std::vector<double> stddev;        ///< population sigma of residual energy over alive nodes
    std::vector<long> sink_cumulative; ///< running total of messages at the sink
    long stability = 0;                ///< rounds until the first death
};

/// Index of the first round that records a death; trace length when nothing
/// died. Rejects empty traces.
long stability_period(const SimulationTrace& trace);

std::vector<int> alive_series(const SimulationTrace& trace);

/// Population standard deviation of residual energy across alive nodes,
/// per round; 0 once one or zero nodes remain.
std::vector<double> residual_stddev_series(const SimulationTrace& trace);

/// Cumulative messages delivered to the sink, per round.
std::vector<long> sink_message_series(const SimulationTrace& trace);

MetricSeries extract_metrics(const SimulationTrace& trace);

} // namespace beccsim
