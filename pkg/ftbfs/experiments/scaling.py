"""Log-log scaling fits over experiment rows."""

from typing import Any, Mapping, Sequence, Union

import numpy as np

from ..errors import DegenerateFitError
from .models import ExperimentRow

MIN_POINTS = 4


def _column(row: Union[ExperimentRow, Mapping[str, Any]], name: str) -> float:
    value = row.get(name) if isinstance(row, Mapping) else getattr(row, name, None)
    if value is None or value == "":
        raise DegenerateFitError(f"row has no value in column {name!r}")
    try:
        return float(value)
    except (TypeError, ValueError):
        raise DegenerateFitError(f"non-numeric value {value!r} in column {name!r}")


def fit_scaling(
    rows: Sequence[Union[ExperimentRow, Mapping[str, Any]]],
    x: str = "n",
    y: str = "forced_edges",
) -> float:
    """Least-squares slope of log y against log x."""
    if len(rows) < MIN_POINTS:
        raise DegenerateFitError(f"need at least {MIN_POINTS} rows, got {len(rows)}")
    xs = np.array([_column(r, x) for r in rows])
    ys = np.array([_column(r, y) for r in rows])
    if (xs <= 0).any() or (ys <= 0).any():
        raise DegenerateFitError(f"columns {x!r} and {y!r} must be positive")
    log_x = np.log(xs)
    if log_x.max() == log_x.min():
        raise DegenerateFitError(f"column {x!r} is constant")
    slope, _ = np.polyfit(log_x, np.log(ys), 1)
    return float(slope)
