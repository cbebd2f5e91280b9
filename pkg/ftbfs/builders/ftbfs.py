"""Deterministic FT-BFS and FT-MBFS constructions from replacement trees."""

import math
from collections import defaultdict
from functools import partial
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..errors import InvalidParameterError
from ..graph import FaultModel, FaultScenario, Graph
from ..parallel import map_ordered
from ..paths import SpTree, canonical_tree, depth
from .models import FtStats, FtStructure


def ceil_sqrt(x: int) -> int:
    """Smallest r with r * r >= x."""
    r = math.isqrt(x)
    return r if r * r == x else r + 1


def size_bound(n: int, tree_depth: int) -> int:
    """Single-source edge-model bound: min(n(Depth+1), (n-1) + n*ceil(sqrt(2n)))."""
    if n == 0:
        return 0
    return min(n * (tree_depth + 1), (n - 1) + n * ceil_sqrt(2 * n))


def multi_size_bound(n: int, sigma: int) -> int:
    """Loose multi-source bound: sigma(n-1) + n*ceil(sqrt(2 sigma n)) + sigma n."""
    if n == 0:
        return 0
    return sigma * (n - 1) + n * ceil_sqrt(2 * sigma * n) + sigma * n


def _tree_faults(tree: SpTree, model: FaultModel) -> List[FaultScenario]:
    """Failures inside the no-fault tree, ascending by id."""
    if model is FaultModel.EDGE:
        return [FaultScenario.edge(e) for e in sorted(tree.edge_set())]
    return [
        FaultScenario.vertex(v)
        for v in range(tree.n)
        if v != tree.root and tree.reachable(v)
    ]


def _check_source(g: Graph, s: int) -> None:
    if not 0 <= s < g.n:
        raise InvalidParameterError(f"source {s} outside 0..{g.n - 1}")


def _replacement_pairs(g: Graph, s: int, fault: FaultScenario) -> List[Tuple[int, int]]:
    """(vertex, parent edge) pairs of the canonical tree of G minus fault."""
    tree = canonical_tree(g.view().with_fault(fault), s)
    return [(v, e) for v, e in enumerate(tree.parent_edge) if e is not None]


def _replacement_edges(
    g: Graph,
    s: int,
    model: FaultModel,
    workers: Optional[int],
) -> Tuple[SpTree, List[List[Tuple[int, int]]]]:
    """No-fault tree plus, per tree fault, the (vertex, parent edge) pairs of its tree."""
    t0 = canonical_tree(g.view(), s)
    job = partial(_replacement_pairs, g, s)
    return t0, map_ordered(job, _tree_faults(t0, model), workers)


def build_ftbfs(
    g: Graph,
    s: int,
    model: FaultModel = FaultModel.EDGE,
    workers: Optional[int] = None,
) -> FtStructure:
    """
    T*(s): the no-fault canonical tree united with the canonical tree of
    G minus f for every failure f inside it.

    Failures outside the tree leave every canonical path intact, so they
    contribute nothing. Replacement trees are merged in fault-id order.
    """
    _check_source(g, s)
    t0, replacements = _replacement_edges(g, s, model, workers)
    tree = t0.edge_set()

    edge_ids: Set[int] = set(tree)
    new_edges: Dict[int, Set[int]] = defaultdict(set)
    for pairs in replacements:
        for v, e in pairs:
            if e not in tree:
                new_edges[v].add(e)
                edge_ids.add(e)

    return FtStructure(
        sources=[s],
        fault_model=model,
        edge_ids=frozenset(edge_ids),
        tree_edges=tree,
        new_edges={v: frozenset(es) for v, es in sorted(new_edges.items())},
        stats=FtStats(n=g.n, m=g.m, size=len(edge_ids), depth={s: depth(t0)}),
    )


def build_ftmbfs(
    g: Graph,
    sources: Sequence[int],
    model: FaultModel = FaultModel.EDGE,
    workers: Optional[int] = None,
) -> FtStructure:
    """T*(S): the union of T*(s) over the sources."""
    sources = list(sources)
    if not sources:
        raise InvalidParameterError("source set must be nonempty")
    if len(set(sources)) != len(sources):
        raise InvalidParameterError(f"duplicate sources in {sources}")

    parts = [build_ftbfs(g, s, model, workers) for s in sources]
    if len(parts) == 1:
        return parts[0]

    tree_edges = frozenset().union(*(p.tree_edges for p in parts))
    edge_ids = frozenset().union(*(p.edge_ids for p in parts))
    new_edges: Dict[int, Set[int]] = defaultdict(set)
    for part in parts:
        for v, es in part.new_edges.items():
            new_edges[v].update(e for e in es if e not in tree_edges)

    depths = {}
    for part in parts:
        depths.update(part.stats.depth)

    return FtStructure(
        sources=sources,
        fault_model=model,
        edge_ids=edge_ids,
        tree_edges=tree_edges,
        new_edges={v: frozenset(es) for v, es in sorted(new_edges.items()) if es},
        stats=FtStats(n=g.n, m=g.m, size=len(edge_ids), depth=depths),
    )


def new_edge_profile(ft: FtStructure) -> List[int]:
    """Per-vertex count of new edges."""
    counts = [0] * ft.stats.n
    for v, es in ft.new_edges.items():
        counts[v] = len(es)
    return counts
