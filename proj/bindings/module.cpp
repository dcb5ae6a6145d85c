#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "beccsim/csv.hpp"
#include "beccsim/engine.hpp"
#include "beccsim/metrics.hpp"
#include "beccsim/version.hpp"

#include <sstream>

namespace py = pybind11;
using namespace beccsim;

namespace {

template <typename Writer>
std::string to_csv_string(Writer&& writer)
{
    std::ostringstream out;
    writer(out);
    return out.str();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "deterministic cluster-routing energy simulator";
    m.attr("__version__") = kVersion;

    py::enum_<Protocol>(m, "Protocol")
        .value("LEACH", Protocol::Leach)
        .value("LEACH_E", Protocol::LeachE)
        .value("SEP", Protocol::Sep)
        .value("SEP_M", Protocol::SepM)
        .value("BECC", Protocol::Becc);

    m.def("protocol_name", [](Protocol p) { return to_string(p); });
    m.def("protocol_from_name", [](const std::string& name) { return protocol_from_string(name); });

    py::class_<Position>(m, "Position")
        .def(py::init<>())
        .def(py::init([](double x, double y) { return Position{x, y}; }), py::arg("x"),
             py::arg("y"))
        .def_readwrite("x", &Position::x)
        .def_readwrite("y", &Position::y);

    py::class_<RadioParams>(m, "RadioParams")
        .def(py::init(&RadioParams::defaults))
        .def_static("defaults", &RadioParams::defaults)
        .def_readwrite("e_elec", &RadioParams::e_elec)
        .def_readwrite("eps_fs", &RadioParams::eps_fs)
        .def_readwrite("eps_mp", &RadioParams::eps_mp)
        .def_readwrite("e_da", &RadioParams::e_da)
        .def_readwrite("msg_bits", &RadioParams::msg_bits)
        .def("validate", &RadioParams::validate);

    m.def("crossover_distance", &crossover_distance);
    m.def("tx_energy", &tx_energy, py::arg("bits"), py::arg("distance_m"), py::arg("radio"));
    m.def("rx_energy", &rx_energy, py::arg("bits"), py::arg("radio"));
    m.def("agg_energy", &agg_energy, py::arg("packets"), py::arg("bits"), py::arg("radio"));

    m.def("becc_relative_factors", &becc_relative_factors, py::arg("energies"));
    m.def("becc_polarized_factors", &becc_polarized_factors, py::arg("energies"));
    m.def("becc_threshold", &becc_threshold, py::arg("q_pol"), py::arg("p_opt"));
    m.def("rotation_epoch", &rotation_epoch, py::arg("p"));
    m.def("rotation_threshold", &rotation_threshold, py::arg("p"), py::arg("round"),
          py::arg("rounds_since_ch"));

    py::class_<SepClassProbabilities>(m, "SepClassProbabilities")
        .def_readonly("normal", &SepClassProbabilities::normal)
        .def_readonly("advanced", &SepClassProbabilities::advanced);
    m.def("sep_class_probabilities", &sep_class_probabilities, py::arg("p_opt"), py::arg("lambda_"),
          py::arg("alpha"));

    py::class_<TwoLevelSpec>(m, "TwoLevelSpec")
        .def(py::init<>())
        .def(py::init([](double e0, double lambda, double alpha) {
                 return TwoLevelSpec{e0, lambda, alpha};
             }),
             py::arg("e0") = 1.0, py::arg("lambda_") = 0.2, py::arg("alpha") = 3.0)
        .def_readwrite("e0", &TwoLevelSpec::e0)
        .def_readwrite("lambda_", &TwoLevelSpec::lambda)
        .def_readwrite("alpha", &TwoLevelSpec::alpha);

    py::class_<MultiLevelSpec>(m, "MultiLevelSpec")
        .def(py::init<>())
        .def(py::init([](double e_min, double e_max, std::optional<double> total_target) {
                 return MultiLevelSpec{e_min, e_max, total_target};
             }),
             py::arg("e_min") = 1.0, py::arg("e_max") = 5.0,
             py::arg("total_target") = std::nullopt)
        .def_readwrite("e_min", &MultiLevelSpec::e_min)
        .def_readwrite("e_max", &MultiLevelSpec::e_max)
        .def_readwrite("total_target", &MultiLevelSpec::total_target);

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def(py::init<>())
        .def_readwrite("nodes", &ScenarioConfig::nodes)
        .def_readwrite("side", &ScenarioConfig::side)
        .def_readwrite("sink", &ScenarioConfig::sink)
        .def_readwrite("heterogeneity", &ScenarioConfig::heterogeneity)
        .def_readwrite("protocol", &ScenarioConfig::protocol)
        .def_readwrite("p_opt", &ScenarioConfig::p_opt)
        .def_readwrite("radio", &ScenarioConfig::radio)
        .def_readwrite("round_budget", &ScenarioConfig::round_budget)
        .def_readwrite("seed", &ScenarioConfig::seed)
        .def_readwrite("replicates", &ScenarioConfig::replicates)
        .def("two_level", &ScenarioConfig::two_level)
        .def("multi_level", &ScenarioConfig::multi_level)
        .def("validate", &ScenarioConfig::validate);

    m.def("parse_config", [](const std::string& text) { return parse_config_string(text); });
    m.def("parse_config",
          [](const std::string& text, const ScenarioConfig& base) {
              return parse_config_string(text, base);
          });
    m.def("parse_config_file", &parse_config_file, py::arg("path"),
          py::arg("base") = ScenarioConfig{});
    m.def("config_to_string", [](const ScenarioConfig& cfg) {
        return to_csv_string([&cfg](std::ostream& out) { write_config(out, cfg); });
    });
    m.def("config_summary", &config_summary);

    py::enum_<Termination>(m, "Termination")
        .value("BUDGET_EXHAUSTED", Termination::BudgetExhausted)
        .value("ALL_NODES_DEAD", Termination::AllNodesDead);

    py::class_<RoundReport>(m, "RoundReport")
        .def_readonly("round", &RoundReport::round)
        .def_readonly("head_count", &RoundReport::head_count)
        .def_readonly("energy_spent", &RoundReport::energy_spent)
        .def_readonly("deaths", &RoundReport::deaths)
        .def_readonly("sink_messages", &RoundReport::sink_messages)
        .def_readonly("residual_after", &RoundReport::residual_after);

    py::class_<SimulationTrace>(m, "SimulationTrace")
        .def_readonly("config", &SimulationTrace::config)
        .def_readonly("seed", &SimulationTrace::seed)
        .def_readonly("rounds", &SimulationTrace::rounds)
        .def_readonly("termination", &SimulationTrace::termination);

    m.def("run_simulation", &run_simulation, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());

    py::class_<MetricSeries>(m, "MetricSeries")
        .def_readonly("alive", &MetricSeries::alive)
        .def_readonly("stddev", &MetricSeries::stddev)
        .def_readonly("sink_cumulative", &MetricSeries::sink_cumulative)
        .def_readonly("stability", &MetricSeries::stability);

    m.def("stability_period", &stability_period);
    m.def("extract_metrics", &extract_metrics);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("protocol", &SweepRow::protocol)
        .def_readonly("value", &SweepRow::value)
        .def_readonly("seed", &SweepRow::seed)
        .def_readonly("stability", &SweepRow::stability);

    py::class_<SweepTable>(m, "SweepTable")
        .def_readonly("param_name", &SweepTable::param_name)
        .def_readonly("rows", &SweepTable::rows);

    py::class_<ProtocolSeries>(m, "ProtocolSeries")
        .def_readonly("protocol", &ProtocolSeries::protocol)
        .def_readonly("seed", &ProtocolSeries::seed)
        .def_readonly("series", &ProtocolSeries::series);

    py::class_<MultilevelResult>(m, "MultilevelResult")
        .def_readonly("runs", &MultilevelResult::runs);

    m.def("replicate_seeds", &replicate_seeds, py::arg("base"), py::arg("replicates"));
    m.def("make_grid", &make_grid, py::arg("start"), py::arg("stop"), py::arg("step"));
    m.def("run_sweep_lambda", &run_sweep_lambda, py::arg("base"), py::arg("lambdas"),
          py::arg("replicates"), py::call_guard<py::gil_scoped_release>());
    m.def("run_sweep_alpha", &run_sweep_alpha, py::arg("base"), py::arg("alphas"),
          py::arg("replicates"), py::call_guard<py::gil_scoped_release>());
    m.def("run_multilevel_experiment", &run_multilevel_experiment, py::arg("base"),
          py::arg("replicates"), py::call_guard<py::gil_scoped_release>());

    m.def("sweep_csv", [](const SweepTable& table, const ScenarioConfig& base) {
        return to_csv_string([&](std::ostream& out) { write_sweep_csv(out, table, base); });
    });
    m.def("series_csv", [](const SimulationTrace& trace) {
        return to_csv_string([&](std::ostream& out) { write_series_csv(out, trace); });
    });
    m.def("multilevel_series_csv", [](const MultilevelResult& result, const ScenarioConfig& base) {
        return to_csv_string(
            [&](std::ostream& out) { write_multilevel_series_csv(out, result, base); });
    });
    m.def("multilevel_stability_csv",
          [](const MultilevelResult& result, const ScenarioConfig& base) {
              return to_csv_string(
                  [&](std::ostream& out) { write_multilevel_stability_csv(out, result, base); });
          });
    m.def("trace_dump", [](const SimulationTrace& trace) {
        return to_csv_string([&](std::ostream& out) { write_trace_dump(out, trace); });
    });
}
