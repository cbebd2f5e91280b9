"""Generators for the lower-bound, reduction and gap families, plus random graphs."""

from .bad_example import gen_bad_example
from .io import load_metadata, read_metadata, save_metadata, write_metadata
from .lower_bounds import gadget_size, gen_lb_multi, gen_lb_single, path_length
from .models import GeneratedInstance, GraphBuilder, InstanceMetadata
from .random_graphs import gen_random, gen_random_connected, is_connected
from .reduction import (
    cover_from_structure,
    gen_setcover_reduction,
    reduction_path_length,
    xy_block,
)

__all__ = [
    "GeneratedInstance",
    "GraphBuilder",
    "InstanceMetadata",
    "cover_from_structure",
    "gadget_size",
    "gen_bad_example",
    "gen_lb_multi",
    "gen_lb_single",
    "gen_random",
    "gen_random_connected",
    "gen_setcover_reduction",
    "is_connected",
    "load_metadata",
    "path_length",
    "read_metadata",
    "reduction_path_length",
    "save_metadata",
    "write_metadata",
    "xy_block",
]
