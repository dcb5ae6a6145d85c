#pragma once

#include "beccsim/experiments.hpp"

#include <functional>
#include <iosfwd>
#include <string>

namespace beccsim {

/// All CSV output: one metric family per file, a '#' comment header line
/// carrying tool version, seed(s) and the resolved config, floats printed
/// with 9 significant digits. Identical inputs produce identical bytes.

/// Sweep table: columns protocol,<param>,seed,stability_period.
void write_sweep_csv(std::ostream& out, const SweepTable& table, const ScenarioConfig& base);

/// Single-run series: columns protocol,round,alive,stddev_j,sink_msgs_cum.
void write_series_csv(std::ostream& out, const SimulationTrace& trace);

/// Replicated multi-level series: same columns keyed by an extra seed
/// column (protocol,seed,round,alive,stddev_j,sink_msgs_cum).
void write_multilevel_series_csv(std::ostream& out, const MultilevelResult& result,
                                 const ScenarioConfig& base);

/// Multi-level headline numbers: protocol,seed,stability_period,final_sink_msgs.
void write_multilevel_stability_csv(std::ostream& out, const MultilevelResult& result,
                                    const ScenarioConfig& base);

/// Complete per-round, per-node dump of a trace (round, head count, deaths,
/// sink messages, spent and residual vectors). The regression substrate:
/// two runs of the same scenario must produce identical bytes.
void write_trace_dump(std::ostream& out, const SimulationTrace& trace);

/// Opens `path` for writing, reporting the path in the error if that fails,
/// and feeds the stream to `writer`.
void export_to_file(const std::string& path, const std::function<void(std::ostream&)>& writer);

} // namespace beccsim
