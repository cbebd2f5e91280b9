"""Logarithmic-factor approximation of the minimum FT-MBFS structure via per-vertex set cover."""

from functools import partial
from typing import Dict, FrozenSet, Hashable, List, Optional, Sequence, Set, Tuple

from ..builders import FtStats, FtStructure
from ..errors import InvalidParameterError
from ..graph import INF, Distance, FaultModel, FaultScenario, Graph
from ..parallel import map_ordered
from ..paths import bfs_distances, canonical_tree, critical_faults, depth
from .greedy import greedy_set_cover
from .models import SetCoverInstance

NO_FAULT = FaultScenario.no_fault()


class DistanceTables:
    """
    dist(s, ., G - f) for every source s and every fault f, plus no fault.

    Only critical faults get their own table; every other fault shares the
    no-fault table of its source, which it leaves unchanged.
    """

    def __init__(
        self,
        model: FaultModel,
        faults: List[FaultScenario],
        base: Dict[int, List[Distance]],
        faulted: Dict[Tuple[int, int], List[Distance]],
    ) -> None:
        self.model = model
        self.faults = faults
        self.base = base
        self.faulted = faulted

    @property
    def sources(self) -> List[int]:
        return list(self.base)

    def is_critical(self, s: int, fault: FaultScenario) -> bool:
        return fault.element is not None and (s, fault.element) in self.faulted

    def dist(self, s: int, fault: FaultScenario) -> List[Distance]:
        if fault.element is None:
            return self.base[s]
        return self.faulted.get((s, fault.element), self.base[s])


def _check_sources(g: Graph, sources: Sequence[int]) -> List[int]:
    sources = list(sources)
    if not sources:
        raise InvalidParameterError("source set must be nonempty")
    if len(set(sources)) != len(sources):
        raise InvalidParameterError(f"duplicate sources in {sources}")
    for s in sources:
        if not 0 <= s < g.n:
            raise InvalidParameterError(f"source {s} outside 0..{g.n - 1}")
    return sources


def _faulted_distances(g: Graph, model: FaultModel, job: Tuple[int, int]) -> List[Distance]:
    s, x = job
    fault = FaultScenario.edge(x) if model is FaultModel.EDGE else FaultScenario.vertex(x)
    return bfs_distances(g.view().with_fault(fault), s)


def distance_tables(
    g: Graph,
    sources: Sequence[int],
    model: FaultModel = FaultModel.EDGE,
    workers: Optional[int] = None,
) -> DistanceTables:
    """One BFS per source, then one per (source, critical fault)."""
    sources = _check_sources(g, sources)
    full = g.view()
    if model is FaultModel.EDGE:
        faults = [FaultScenario.edge(e) for e in range(g.m)]
    else:
        faults = [FaultScenario.vertex(v) for v in range(g.n)]

    base = {s: bfs_distances(full, s) for s in sources}
    jobs = [
        (s, x)
        for s in sources
        for x in sorted(critical_faults(full, s, base[s], model))
        if model is FaultModel.EDGE or x != s
    ]

    recompute = partial(_faulted_distances, g, model)
    faulted = dict(zip(jobs, map_ordered(recompute, jobs, workers)))
    return DistanceTables(model, faults, base, faulted)


def coverage_sets(
    g: Graph,
    sources: Sequence[int],
    v: int,
    tables: DistanceTables,
    compress: bool = False,
) -> SetCoverInstance:
    """
    The set-cover instance of vertex v.

    Universe: pairs (s, f) with s != v, f not a failure of s or v, and v
    reachable from s in G - f. The set of neighbor u holds the pairs for
    which edge (u, v) survives f and dist(s, u, G - f) = dist(s, v, G - f) - 1.
    Sets are ordered by neighbor id and named by it.

    With compress=True, pairs lying in exactly the same sets become a
    single element weighted by their count.
    """
    nbrs = sorted(g.neighbors(v))
    names = [u for u, _ in nbrs]
    local_edges = {e for _, e in nbrs}
    local_vertices = set(names)

    def signature(d: List[Distance], fault: FaultScenario) -> Tuple[int, ...]:
        target = d[v] - 1
        fe, fv = fault.failed_edge, fault.failed_vertex
        return tuple(
            j for j, (u, e) in enumerate(nbrs) if e != fe and u != fv and d[u] == target
        )

    pairs: List[Tuple[Hashable, Tuple[int, ...]]] = []
    for s in sources:
        if s == v:
            continue
        base = tables.dist(s, NO_FAULT)
        if base[v] == INF:
            shared: Optional[Tuple[int, ...]] = None
        else:
            shared = signature(base, NO_FAULT)
            pairs.append(((s, NO_FAULT), shared))
        for fault in tables.faults:
            x = fault.element
            if tables.model is FaultModel.VERTEX and x in (s, v):
                continue
            touches = x in local_edges if tables.model is FaultModel.EDGE else x in local_vertices
            if tables.is_critical(s, fault) or touches:
                d = tables.dist(s, fault)
                if d[v] != INF:
                    pairs.append(((s, fault), signature(d, fault)))
            elif shared is not None:
                pairs.append(((s, fault), shared))

    if compress:
        groups: Dict[Tuple[int, ...], List] = {}
        for element, sig in pairs:
            if sig in groups:
                groups[sig][1] += 1
            else:
                groups[sig] = [element, 1]
        universe = [rep for rep, _ in groups.values()]
        weights = [count for _, count in groups.values()]
        members: List[Set[Hashable]] = [set() for _ in nbrs]
        for sig, (rep, _) in groups.items():
            for j in sig:
                members[j].add(rep)
    else:
        universe = [element for element, _ in pairs]
        weights = []
        members = [set() for _ in nbrs]
        for element, sig in pairs:
            for j in sig:
                members[j].add(element)

    return SetCoverInstance(
        universe=universe,
        sets=[frozenset(m) for m in members],
        names=names,
        weights=weights,
    )


def _cover_vertex(
    g: Graph,
    sources: List[int],
    tables: DistanceTables,
    v: int,
) -> FrozenSet[int]:
    """Edges to the neighbors greedy picks for v."""
    inst = coverage_sets(g, sources, v, tables, compress=True)
    return frozenset(g.edge_index(u, v) for u in greedy_set_cover(inst))


def build_approx(
    g: Graph,
    sources: Sequence[int],
    model: FaultModel = FaultModel.EDGE,
    workers: Optional[int] = None,
) -> FtStructure:
    """
    Start from no edges; for every vertex v, cover its universe greedily
    and keep the edge (u, v) of each chosen neighbor u.

    The no-fault pairs force a true shortest-path predecessor per source,
    so the result contains a BFS tree of every source.
    """
    sources = _check_sources(g, sources)
    tables = distance_tables(g, sources, model, workers)

    cover_round = partial(_cover_vertex, g, sources, tables)
    chosen = map_ordered(cover_round, range(g.n), workers)
    edge_ids = frozenset().union(*chosen) if chosen else frozenset()

    trees = [canonical_tree(g.view(), s) for s in sources]
    tree_edges = frozenset().union(*(t.edge_set() for t in trees))
    new_edges = {
        v: frozenset(es - tree_edges) for v, es in enumerate(chosen) if es - tree_edges
    }

    return FtStructure(
        sources=sources,
        fault_model=model,
        edge_ids=edge_ids,
        tree_edges=tree_edges & edge_ids,
        new_edges=new_edges,
        stats=FtStats(
            n=g.n,
            m=g.m,
            size=len(edge_ids),
            depth={t.root: depth(t) for t in trees},
        ),
    )
