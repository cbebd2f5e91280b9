"""FT-BFS and FT-MBFS builders."""

from .ftbfs import (
    build_ftbfs,
    build_ftmbfs,
    ceil_sqrt,
    multi_size_bound,
    new_edge_profile,
    size_bound,
)
from .io import parse_structure, read_structure, save_structure, write_structure
from .models import FtStats, FtStructure

__all__ = [
    "FtStats",
    "FtStructure",
    "build_ftbfs",
    "build_ftmbfs",
    "ceil_sqrt",
    "multi_size_bound",
    "new_edge_profile",
    "parse_structure",
    "read_structure",
    "save_structure",
    "size_bound",
    "write_structure",
]
