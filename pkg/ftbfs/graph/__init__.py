"""Graph representation, faults and file I/O."""

from .faults import apply_fault, check_fault, iter_faults
from .io import parse_graph, read_graph, save_graph, write_graph
from .models import (
    INF,
    Distance,
    FaultKind,
    FaultModel,
    FaultScenario,
    Graph,
    GraphView,
)

__all__ = [
    "INF",
    "Distance",
    "FaultKind",
    "FaultModel",
    "FaultScenario",
    "Graph",
    "GraphView",
    "apply_fault",
    "check_fault",
    "iter_faults",
    "parse_graph",
    "read_graph",
    "save_graph",
    "write_graph",
]
