"""Set cover and the set-cover approximation of minimum FT structures."""

from .approx import DistanceTables, build_approx, coverage_sets, distance_tables
from .greedy import brute_set_cover, greedy_set_cover, harmonic
from .io import (
    SAMPLE_COVER,
    parse_setcover,
    read_setcover,
    save_setcover,
    write_setcover,
)
from .models import SetCoverInstance

__all__ = [
    "SAMPLE_COVER",
    "DistanceTables",
    "SetCoverInstance",
    "brute_set_cover",
    "build_approx",
    "coverage_sets",
    "distance_tables",
    "greedy_set_cover",
    "harmonic",
    "parse_setcover",
    "read_setcover",
    "save_setcover",
    "write_setcover",
]
