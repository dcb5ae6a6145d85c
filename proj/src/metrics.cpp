#include "beccsim/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace beccsim {

long stability_period(const SimulationTrace& trace)
{
    if (trace.rounds.empty()) {
        throw std::invalid_argument("stability_period: empty trace");
    }
    for (const RoundReport& report : trace.rounds) {
        if (!report.deaths.empty()) {
            return report.round;
        }
    }
    return static_cast<long>(trace.rounds.size());
}

std::vector<int> alive_series(const SimulationTrace& trace)
{
    std::vector<int> series;
    series.reserve(trace.rounds.size());
    int alive = trace.config.nodes;
    for (const RoundReport& report : trace.rounds) {
        alive -= static_cast<int>(report.deaths.size());
        series.push_back(alive);
    }
    return series;
}

std::vector<double> residual_stddev_series(const SimulationTrace& trace)
{
    std::vector<double> series;
    series.reserve(trace.rounds.size());

    std::vector<bool> alive(static_cast<std::size_t>(trace.config.nodes), true);
    for (const RoundReport& report : trace.rounds) {
        for (const int id : report.deaths) {
            alive[static_cast<std::size_t>(id)] = false;
        }
        int count = 0;
        double sum = 0.0;
        for (std::size_t i = 0; i < alive.size(); ++i) {
            if (alive[i]) {
                ++count;
                sum += report.residual_after[i];
            }
        }
        if (count <= 1) {
            series.push_back(0.0);
            continue;
        }
        const double mean = sum / count;
        double sq = 0.0;
        for (std::size_t i = 0; i < alive.size(); ++i) {
            if (alive[i]) {
                const double d = report.residual_after[i] - mean;
                sq += d * d;
            }
        }
        series.push_back(std::sqrt(sq / count));
    }
    return series;
}

std::vector<long> sink_message_series(const SimulationTrace& trace)
{
    std::vector<long> series;
    series.reserve(trace.rounds.size());
    long total = 0;
    for (const RoundReport& report : trace.rounds) {
        total += report.sink_messages;
        series.push_back(total);
    }
    return series;
}

MetricSeries extract_metrics(const SimulationTrace& trace)
{
    MetricSeries m;
    m.alive = alive_series(trace);
    m.stddev = residual_stddev_series(trace);
    m.sink_cumulative = sink_message_series(trace);
    m.stability = stability_period(trace);
    return m;
}

} // namespace beccsim
