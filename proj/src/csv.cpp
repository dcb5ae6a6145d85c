#include "beccsim/csv.hpp"

#include "beccsim/metrics.hpp"
#include "beccsim/version.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace beccsim {

namespace {

std::string fmt9(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// full precision for the regression dump, so byte equality implies value
// equality and nothing hides behind rounding
std::string fmt17(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_header(std::ostream& out, const std::string& what, const ScenarioConfig& cfg)
{
    out << "# beccsim " << kVersion << " " << what << "\n";
    out << "# " << config_summary(cfg) << "\n";
}

} // namespace

void write_sweep_csv(std::ostream& out, const SweepTable& table, const ScenarioConfig& base)
{
    write_header(out, "sweep " + table.param_name, base);
    out << "protocol," << table.param_name << ",seed,stability_period\n";
    for (const SweepRow& row : table.rows) {
        out << to_string(row.protocol) << "," << fmt9(row.value) << "," << row.seed << ","
            << row.stability << "\n";
    }
}

void write_series_csv(std::ostream& out, const SimulationTrace& trace)
{
    write_header(out, "series seed=" + std::to_string(trace.seed), trace.config);
    const MetricSeries m = extract_metrics(trace);
    out << "protocol,round,alive,stddev_j,sink_msgs_cum\n";
    const std::string name = to_string(trace.config.protocol);
    for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
        out << name << "," << r << "," << m.alive[r] << "," << fmt9(m.stddev[r]) << ","
            << m.sink_cumulative[r] << "\n";
    }
}

void write_multilevel_series_csv(std::ostream& out, const MultilevelResult& result,
                                 const ScenarioConfig& base)
{
    write_header(out, "multilevel series", base);
    out << "protocol,seed,round,alive,stddev_j,sink_msgs_cum\n";
    for (const ProtocolSeries& run : result.runs) {
        const std::string name = to_string(run.protocol);
        for (std::size_t r = 0; r < run.series.alive.size(); ++r) {
            out << name << "," << run.seed << "," << r << "," << run.series.alive[r] << ","
                << fmt9(run.series.stddev[r]) << "," << run.series.sink_cumulative[r] << "\n";
        }
    }
}

void write_multilevel_stability_csv(std::ostream& out, const MultilevelResult& result,
                                    const ScenarioConfig& base)
{
    write_header(out, "multilevel stability", base);
    out << "protocol,seed,stability_period,final_sink_msgs\n";
    for (const ProtocolSeries& run : result.runs) {
        const long final_msgs =
            run.series.sink_cumulative.empty() ? 0 : run.series.sink_cumulative.back();
        out << to_string(run.protocol) << "," << run.seed << "," << run.series.stability << ","
            << final_msgs << "\n";
    }
}

void write_trace_dump(std::ostream& out, const SimulationTrace& trace)
{
    write_header(out, "trace seed=" + std::to_string(trace.seed), trace.config);
    out << "# termination="
        << (trace.termination == Termination::AllNodesDead ? "all-dead" : "budget") << " rounds="
        << trace.rounds.size() << "\n";
    for (const RoundReport& report : trace.rounds) {
        out << "round=" << report.round << " heads=" << report.head_count
            << " sink=" << report.sink_messages << " deaths=";
        for (std::size_t i = 0; i < report.deaths.size(); ++i) {
            out << (i ? ";" : "") << report.deaths[i];
        }
        out << "\n";
        out << "spent=";
        for (std::size_t i = 0; i < report.energy_spent.size(); ++i) {
            out << (i ? ";" : "") << fmt17(report.energy_spent[i]);
        }
        out << "\n";
        out << "residual=";
        for (std::size_t i = 0; i < report.residual_after.size(); ++i) {
            out << (i ? ";" : "") << fmt17(report.residual_after[i]);
        }
        out << "\n";
    }
}

void export_to_file(const std::string& path, const std::function<void(std::ostream&)>& writer)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    writer(out);
    out.flush();
    if (!out) {
        throw std::runtime_error("write error on '" + path + "'");
    }
}

} // namespace beccsim
