// Acceptance gate for the simulator: eight checks, one [PASS]/[FAIL] line
// each, nonzero exit if any fail. Every tolerance is pinned right here.

#include "beccsim/csv.hpp"
#include "beccsim/engine.hpp"
#include "beccsim/experiments.hpp"
#include "beccsim/metrics.hpp"
#include "oracles/becc_reference.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace beccsim;

namespace {

constexpr double kRadioRelTol = 1e-12;
constexpr double kFactorSumTol = 1e-9;
constexpr double kFactorCrossCheckRelTol = 1e-12;
constexpr double kHeadCountStdErrors = 3.0;
constexpr double kOrderingRatioMin = 1.5;
constexpr double kSpearmanMin = 0.7;
constexpr double kLeachFlatnessMax = 0.25;
constexpr int kGridMaxWinsMin = 16;
constexpr int kThroughputWinsMin = 16;
constexpr double kConservationRelTol = 1e-9;
constexpr int kSeeds = 20;
constexpr std::uint64_t kBaseSeed = 1;

int g_failures = 0;

void report(int index, const std::string& label, bool pass, const std::string& detail,
            double seconds)
{
    std::printf("[%s] C%d %s: %s (%.1fs)\n", pass ? "PASS" : "FAIL", index, label.c_str(),
                detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

bool close_rel(double actual, double expected, double rel_tol)
{
    return std::abs(actual - expected) <= rel_tol * std::max(1.0, std::abs(expected));
}

double median(std::vector<double> values)
{
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) {
        return values[n / 2];
    }
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double mean(const std::vector<double>& values)
{
    return std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
}

// average ranks, so ties do not bias the correlation
std::vector<double> ranks(const std::vector<double>& values)
{
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> r(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        const double avg_rank = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            r[order[k]] = avg_rank;
        }
        i = j + 1;
    }
    return r;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::vector<double> rx = ranks(x);
    const std::vector<double> ry = ranks(y);
    const double mx = mean(rx);
    const double my = mean(ry);
    double cov = 0.0;
    double vx = 0.0;
    double vy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        cov += (rx[i] - mx) * (ry[i] - my);
        vx += (rx[i] - mx) * (rx[i] - mx);
        vy += (ry[i] - my) * (ry[i] - my);
    }
    if (vx == 0.0 || vy == 0.0) {
        return 0.0;
    }
    return cov / std::sqrt(vx * vy);
}

double least_squares_slope(const std::vector<double>& y)
{
    const std::size_t n = y.size();
    const double mx = 0.5 * static_cast<double>(n - 1);
    const double my = mean(y);
    double cov = 0.0;
    double vx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = static_cast<double>(i) - mx;
        cov += dx * (y[i] - my);
        vx += dx * dx;
    }
    return cov / vx;
}

ScenarioConfig multilevel_base()
{
    ScenarioConfig cfg;
    cfg.heterogeneity = MultiLevelSpec{1.0, 5.0, std::nullopt};
    cfg.seed = kBaseSeed;
    return cfg;
}

ScenarioConfig two_level_base()
{
    ScenarioConfig cfg;
    cfg.heterogeneity = TwoLevelSpec{1.0, 0.2, 3.0};
    cfg.seed = kBaseSeed;
    return cfg;
}

void check_radio_model()
{
    Timer timer;
    const RadioParams radio = RadioParams::defaults();
    bool pass = true;
    pass = pass && close_rel(tx_energy(4000, 50.0, radio), 3.0e-4, kRadioRelTol);
    pass = pass && close_rel(tx_energy(4000, 100.0, radio), 7.2e-4, kRadioRelTol);
    pass = pass && close_rel(rx_energy(4000, radio), 2.0e-4, kRadioRelTol);
    pass = pass && close_rel(agg_energy(10, 4000, radio), 2.0e-4, kRadioRelTol);
    pass = pass && close_rel(crossover_distance(radio), std::sqrt(10.0 / 0.0013), kRadioRelTol);
    report(1, "radio model", pass, "five frozen energies within rel 1e-12", timer.seconds());
}

void check_polarized_factors()
{
    Timer timer;
    RandomSource rng(2024);
    bool pass = true;
    std::string detail = "10000 random clusters: sum, zeroing, ordering, reference";

    for (int trial = 0; trial < 10000 && pass; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform_int(50));
        std::vector<double> energies(n);
        for (double& e : energies) {
            e = 10.0 - rng.uniform(0.0, 10.0); // (0, 10]
        }

        const std::vector<double> q_rel = becc_relative_factors(energies);
        const std::vector<double> q_pol = becc_polarized_factors(energies);
        const std::vector<double> reference = becc_reference::polarized_factors(energies);

        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sum += q_pol[i];
            if (!close_rel(q_pol[i], reference[i], kFactorCrossCheckRelTol)) {
                pass = false;
                detail = "diverges from the reference transcription";
            }
            if (q_rel[i] < 1.0 && q_pol[i] != 0.0) {
                pass = false;
                detail = "below-average member kept a nonzero factor";
            }
        }
        if (std::abs(sum - static_cast<double>(n)) > kFactorSumTol) {
            pass = false;
            detail = "factor sum drifted from n";
        }

        // among above-average members the polarized ordering must follow
        // the relative ordering
        std::vector<std::size_t> above;
        for (std::size_t i = 0; i < n; ++i) {
            if (q_rel[i] >= 1.0) {
                above.push_back(i);
            }
        }
        std::sort(above.begin(), above.end(),
                  [&q_rel](std::size_t a, std::size_t b) { return q_rel[a] < q_rel[b]; });
        for (std::size_t k = 0; k + 1 < above.size(); ++k) {
            if (q_pol[above[k]] > q_pol[above[k + 1]] + 1e-15) {
                pass = false;
                detail = "polarized ordering broke relative ordering";
            }
        }
    }
    report(2, "polarized factors", pass, detail, timer.seconds());
}

void check_expected_head_count()
{
    Timer timer;
    ScenarioConfig cfg = multilevel_base();
    cfg.protocol = Protocol::Becc;
    cfg.round_budget = 3;

    std::vector<double> counts;
    counts.reserve(1000);
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        cfg.seed = seed;
        const SimulationTrace trace = run_simulation(cfg);
        counts.push_back(static_cast<double>(trace.rounds[2].head_count));
    }

    const double m = mean(counts);
    double var = 0.0;
    for (const double c : counts) {
        var += (c - m) * (c - m);
    }
    var /= static_cast<double>(counts.size() - 1);
    const double stderr_mean = std::sqrt(var / static_cast<double>(counts.size()));
    const double expected = cfg.p_opt * cfg.nodes;
    const bool pass = std::abs(m - expected) <= kHeadCountStdErrors * stderr_mean;

    std::ostringstream detail;
    detail << "mean " << m << " vs " << expected << " (3 SE = " << kHeadCountStdErrors * stderr_mean
           << ") over 1000 seeds, third set-up phase";
    report(3, "expected head count", pass, detail.str(), timer.seconds());
}

struct MultilevelSummary {
    // per protocol: stability and final sink messages per seed, stddev series
    std::map<Protocol, std::vector<double>> stability;
    std::map<Protocol, std::vector<long>> throughput;
    std::map<Protocol, std::vector<std::vector<double>>> stddev;
};

MultilevelSummary run_multilevel_bundle()
{
    const MultilevelResult result = run_multilevel_experiment(multilevel_base(), kSeeds);
    MultilevelSummary summary;
    for (const ProtocolSeries& run : result.runs) {
        summary.stability[run.protocol].push_back(static_cast<double>(run.series.stability));
        summary.throughput[run.protocol].push_back(run.series.sink_cumulative.back());
        summary.stddev[run.protocol].push_back(run.series.stddev);
    }
    return summary;
}

void check_multilevel_ordering(const MultilevelSummary& summary, double seconds)
{
    const double becc = median(summary.stability.at(Protocol::Becc));
    const double leach_e = median(summary.stability.at(Protocol::LeachE));
    const double sep_m = median(summary.stability.at(Protocol::SepM));
    const double leach = median(summary.stability.at(Protocol::Leach));

    const bool ordered = becc > leach_e && leach_e > sep_m && sep_m > leach;
    const bool ratio_ok = leach > 0.0 && becc / leach >= kOrderingRatioMin;

    std::ostringstream detail;
    detail << "medians BECC " << becc << " > LEACH-E " << leach_e << " > SEP-M " << sep_m
           << " > LEACH " << leach << ", ratio " << (leach > 0.0 ? becc / leach : 0.0)
           << " >= " << kOrderingRatioMin;
    report(4, "multi-level ordering", ordered && ratio_ok, detail.str(), seconds);
}

struct SweepSummary {
    std::vector<double> grid;
    // per protocol: mean stability per grid point, and per-seed stability at
    // the grid maximum
    std::map<Protocol, std::vector<double>> means;
    std::map<Protocol, std::vector<double>> at_max;
};

SweepSummary summarize(const SweepTable& table, const std::vector<double>& grid)
{
    SweepSummary summary;
    summary.grid = grid;
    for (const Protocol protocol : sweep_protocols()) {
        summary.means[protocol] = {};
        summary.at_max[protocol] = {};
    }
    std::map<Protocol, std::map<double, std::vector<double>>> grouped;
    for (const SweepRow& row : table.rows) {
        grouped[row.protocol][row.value].push_back(static_cast<double>(row.stability));
    }
    for (const Protocol protocol : sweep_protocols()) {
        for (const double value : grid) {
            summary.means[protocol].push_back(mean(grouped[protocol][value]));
        }
        summary.at_max[protocol] = grouped[protocol][grid.back()];
    }
    return summary;
}

int count_grid_max_wins(const SweepSummary& summary)
{
    int wins = 0;
    const std::vector<double>& becc = summary.at_max.at(Protocol::Becc);
    for (std::size_t s = 0; s < becc.size(); ++s) {
        const bool win = becc[s] > summary.at_max.at(Protocol::Leach)[s] &&
                         becc[s] > summary.at_max.at(Protocol::LeachE)[s] &&
                         becc[s] > summary.at_max.at(Protocol::Sep)[s];
        wins += win ? 1 : 0;
    }
    return wins;
}

void check_two_level_trends(const SweepSummary& lambda_sweep, const SweepSummary& alpha_sweep,
                            double seconds)
{
    bool pass = true;
    std::ostringstream detail;

    for (const Protocol protocol : {Protocol::Becc, Protocol::LeachE, Protocol::Sep}) {
        const double rho_lambda = spearman(lambda_sweep.grid, lambda_sweep.means.at(protocol));
        const double rho_alpha = spearman(alpha_sweep.grid, alpha_sweep.means.at(protocol));
        pass = pass && rho_lambda > kSpearmanMin && rho_alpha > kSpearmanMin;
        detail << to_string(protocol) << " rho l=" << std::round(rho_lambda * 100.0) / 100.0
               << " a=" << std::round(rho_alpha * 100.0) / 100.0 << "; ";
    }

    detail << "LEACH spread";
    for (const SweepSummary* sweep : {&lambda_sweep, &alpha_sweep}) {
        const std::vector<double>& leach_means = sweep->means.at(Protocol::Leach);
        const double center = mean(leach_means);
        double worst = 0.0;
        for (const double m : leach_means) {
            worst = std::max(worst, std::abs(m - center) / center);
        }
        pass = pass && worst < kLeachFlatnessMax;
        detail << (sweep == &lambda_sweep ? " l=" : " a=") << std::round(worst * 1000.0) / 10.0
               << "%";
    }

    const int lambda_wins = count_grid_max_wins(lambda_sweep);
    const int alpha_wins = count_grid_max_wins(alpha_sweep);
    pass = pass && lambda_wins >= kGridMaxWinsMin && alpha_wins >= kGridMaxWinsMin;
    detail << "; grid-max wins l=" << lambda_wins << "/" << kSeeds << " a=" << alpha_wins << "/"
           << kSeeds;

    report(5, "two-level trends", pass, detail.str(), seconds);
}

void check_balancing(const MultilevelSummary& summary, double seconds)
{
    bool pass = true;
    std::ostringstream detail;
    double worst_slope = -1e9;
    int slope_fails = 0;
    int mean_fails = 0;

    const auto& becc_runs = summary.stddev.at(Protocol::Becc);
    const auto& leach_runs = summary.stddev.at(Protocol::Leach);
    const auto& becc_stability = summary.stability.at(Protocol::Becc);

    for (std::size_t s = 0; s < becc_runs.size(); ++s) {
        const auto window = static_cast<std::size_t>(becc_stability[s]);
        const std::size_t slope_len = std::min(window, becc_runs[s].size());
        if (slope_len < 2) {
            pass = false;
            continue;
        }
        const std::vector<double> becc_window(becc_runs[s].begin(),
                                              becc_runs[s].begin() +
                                                  static_cast<std::ptrdiff_t>(slope_len));
        const double slope = least_squares_slope(becc_window);
        worst_slope = std::max(worst_slope, slope);
        if (slope >= 0.0) {
            ++slope_fails;
        }

        const std::size_t shared = std::min(slope_len, leach_runs[s].size());
        const std::vector<double> becc_shared(becc_runs[s].begin(),
                                              becc_runs[s].begin() +
                                                  static_cast<std::ptrdiff_t>(shared));
        const std::vector<double> leach_shared(leach_runs[s].begin(),
                                               leach_runs[s].begin() +
                                                   static_cast<std::ptrdiff_t>(shared));
        if (mean(becc_shared) >= mean(leach_shared)) {
            ++mean_fails;
        }
    }
    pass = pass && slope_fails == 0 && mean_fails == 0;
    detail << "all " << kSeeds << " runs: slope<0 (fails " << slope_fails << ", worst "
           << worst_slope << "), mean below LEACH (fails " << mean_fails << ")";
    report(6, "energy balancing", pass, detail.str(), seconds);
}

void check_throughput(const MultilevelSummary& summary, double seconds)
{
    const auto& becc = summary.throughput.at(Protocol::Becc);
    int wins = 0;
    for (std::size_t s = 0; s < becc.size(); ++s) {
        const bool win = becc[s] >= summary.throughput.at(Protocol::Leach)[s] &&
                         becc[s] >= summary.throughput.at(Protocol::LeachE)[s] &&
                         becc[s] >= summary.throughput.at(Protocol::SepM)[s];
        wins += win ? 1 : 0;
    }
    const bool pass = wins >= kThroughputWinsMin;
    std::ostringstream detail;
    detail << "BECC delivers >= every baseline in " << wins << "/" << kSeeds << " seeds"
           << " (seed " << kBaseSeed << " finals: BECC "
           << static_cast<long long>(becc.front()) << " LEACH "
           << static_cast<long long>(summary.throughput.at(Protocol::Leach).front()) << " LEACH-E "
           << static_cast<long long>(summary.throughput.at(Protocol::LeachE).front()) << " SEP-M "
           << static_cast<long long>(summary.throughput.at(Protocol::SepM).front()) << ")";
    report(7, "throughput", pass, detail.str(), seconds);
}

bool conserves_energy(const SimulationTrace& trace)
{
    const std::size_t n = trace.rounds.front().residual_after.size();
    double total_initial = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        total_initial += trace.rounds.front().residual_after[i] +
                         trace.rounds.front().energy_spent[i];
    }

    double previous = total_initial;
    for (const RoundReport& round : trace.rounds) {
        double spent = 0.0;
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            spent += round.energy_spent[i];
            residual += round.residual_after[i];
        }
        if (std::abs(previous - spent - residual) > kConservationRelTol * total_initial) {
            return false;
        }
        previous = residual;
    }
    return true;
}

void check_determinism()
{
    Timer timer;
    bool pass = true;
    std::string detail = "byte-identical replays and per-round conservation within rel 1e-9";

    ScenarioConfig multi = multilevel_base();
    multi.protocol = Protocol::Becc;
    multi.round_budget = 600;

    ScenarioConfig two = two_level_base();
    two.protocol = Protocol::Sep;
    two.round_budget = 600;
    two.seed = 4;

    for (const ScenarioConfig& cfg : {multi, two}) {
        const SimulationTrace first = run_simulation(cfg);
        const SimulationTrace second = run_simulation(cfg);

        std::ostringstream dump_first;
        std::ostringstream dump_second;
        write_trace_dump(dump_first, first);
        write_trace_dump(dump_second, second);
        if (dump_first.str() != dump_second.str()) {
            pass = false;
            detail = "replay produced a different trace";
        }
        if (!conserves_energy(first)) {
            pass = false;
            detail = "a round broke the conservation invariant";
        }
    }

    // conservation must also hold over a full lifetime, floor and all
    ScenarioConfig drain = multilevel_base();
    drain.nodes = 40;
    drain.protocol = Protocol::Becc;
    if (!conserves_energy(run_simulation(drain))) {
        pass = false;
        detail = "a full-lifetime run broke the conservation invariant";
    }

    report(8, "determinism and conservation", pass, detail, timer.seconds());
}

} // namespace

int main()
{
    std::printf("acceptance suite: %d seeds per experiment, base seed %llu\n", kSeeds,
                static_cast<unsigned long long>(kBaseSeed));
    std::fflush(stdout);

    check_radio_model();
    check_polarized_factors();
    check_expected_head_count();

    Timer multilevel_timer;
    const MultilevelSummary multilevel = run_multilevel_bundle();
    const double multilevel_seconds = multilevel_timer.seconds();
    check_multilevel_ordering(multilevel, multilevel_seconds);

    Timer sweep_timer;
    const SweepTable lambda_table =
        run_sweep_lambda(two_level_base(), make_grid(0.1, 0.9, 0.1), kSeeds);
    const SweepTable alpha_table =
        run_sweep_alpha(two_level_base(), make_grid(0.5, 4.5, 0.5), kSeeds);
    const double sweep_seconds = sweep_timer.seconds();
    check_two_level_trends(summarize(lambda_table, make_grid(0.1, 0.9, 0.1)),
                           summarize(alpha_table, make_grid(0.5, 4.5, 0.5)), sweep_seconds);

    check_balancing(multilevel, 0.0);
    check_throughput(multilevel, 0.0);
    check_determinism();

    std::printf("%d/8 criteria passed\n", 8 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
