"""Python interface to the cluster-routing energy simulator."""

from ._core import (
    __version__,
    MetricSeries,
    MultiLevelSpec,
    MultilevelResult,
    Position,
    Protocol,
    ProtocolSeries,
    RadioParams,
    RoundReport,
    ScenarioConfig,
    SepClassProbabilities,
    SimulationTrace,
    SweepRow,
    SweepTable,
    Termination,
    TwoLevelSpec,
    agg_energy,
    becc_polarized_factors,
    becc_relative_factors,
    becc_threshold,
    config_summary,
    config_to_string,
    crossover_distance,
    extract_metrics,
    make_grid,
    multilevel_series_csv,
    multilevel_stability_csv,
    parse_config,
    parse_config_file,
    protocol_from_name,
    protocol_name,
    replicate_seeds,
    rotation_epoch,
    rotation_threshold,
    run_multilevel_experiment,
    run_simulation,
    run_sweep_alpha,
    run_sweep_lambda,
    rx_energy,
    sep_class_probabilities,
    series_csv,
    stability_period,
    sweep_csv,
    trace_dump,
    tx_energy,
)

__all__ = [
    "__version__",
    "MetricSeries",
    "MultiLevelSpec",
    "MultilevelResult",
    "Position",
    "Protocol",
    "ProtocolSeries",
    "RadioParams",
    "RoundReport",
    "ScenarioConfig",
    "SepClassProbabilities",
    "SimulationTrace",
    "SweepRow",
    "SweepTable",
    "Termination",
    "TwoLevelSpec",
    "agg_energy",
    "becc_polarized_factors",
    "becc_relative_factors",
    "becc_threshold",
    "config_summary",
    "config_to_string",
    "crossover_distance",
    "extract_metrics",
    "make_grid",
    "multilevel_series_csv",
    "multilevel_stability_csv",
    "parse_config",
    "parse_config_file",
    "protocol_from_name",
    "protocol_name",
    "replicate_seeds",
    "rotation_epoch",
    "rotation_threshold",
    "run_multilevel_experiment",
    "run_simulation",
    "run_sweep_alpha",
    "run_sweep_lambda",
    "rx_energy",
    "sep_class_probabilities",
    "series_csv",
    "stability_period",
    "sweep_csv",
    "trace_dump",
    "tx_energy",
]
