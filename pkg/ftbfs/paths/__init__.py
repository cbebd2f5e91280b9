"""Canonical shortest paths under lexicographic (hops, edge-set) costs."""

from .canonical import (
    bfs_distances,
    canonical_tree,
    compare_costs,
    critical_faults,
    depth,
    tree_path,
)
from .models import CanonCost, Ordering, SpTree

__all__ = [
    "CanonCost",
    "Ordering",
    "SpTree",
    "bfs_distances",
    "canonical_tree",
    "compare_costs",
    "critical_faults",
    "depth",
    "tree_path",
]
