"""Experiment harness and scaling fits."""

from .models import COLUMNS, ExperimentRow, format_params, parse_params, value_range
from .runner import (
    SWEEPS,
    ExperimentOptions,
    ExperimentRunner,
    ExperimentStage,
    generate_instance,
    read_csv,
    run_cell,
    run_experiment,
    stats_path,
    write_csv,
)
from .scaling import fit_scaling

__all__ = [
    "COLUMNS",
    "SWEEPS",
    "ExperimentOptions",
    "ExperimentRow",
    "ExperimentRunner",
    "ExperimentStage",
    "fit_scaling",
    "format_params",
    "generate_instance",
    "parse_params",
    "read_csv",
    "run_cell",
    "run_experiment",
    "stats_path",
    "value_range",
    "write_csv",
]
