"""The fault-tolerance definition, executed over every fault."""

from functools import partial
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..errors import InvalidParameterError
from ..graph import INF, Distance, FaultModel, FaultScenario, Graph, GraphView, iter_faults
from ..parallel import first_hit
from ..paths import bfs_distances, critical_faults
from .models import Requirement, VerifyResult, Violation

# Faults per job sent to a worker process.
FAULT_CHUNK = 16


def _check_sources(g: Graph, sources: Sequence[int]) -> List[int]:
    sources = list(sources)
    if not sources:
        raise InvalidParameterError("source set must be nonempty")
    for s in sources:
        if not 0 <= s < g.n:
            raise InvalidParameterError(f"source {s} outside 0..{g.n - 1}")
    return sources


def _first_mismatch(
    s: int,
    fault: FaultScenario,
    in_candidate: List[Distance],
    in_graph: List[Distance],
) -> Optional[Violation]:
    skip = fault.failed_vertex
    for v, (dc, dg) in enumerate(zip(in_candidate, in_graph)):
        if v != skip and dc != dg:
            return Violation(
                source=s,
                fault=fault,
                target=v,
                dist_in_candidate=dc,
                dist_in_graph=dg,
            )
    return None


def _check_fault(
    g: Graph,
    kept: FrozenSet[int],
    s: int,
    fault: FaultScenario,
) -> Optional[Violation]:
    """Compare both distance tables from s under one fault."""
    return _first_mismatch(
        s,
        fault,
        bfs_distances(g.view(kept).with_fault(fault), s),
        bfs_distances(g.view().with_fault(fault), s),
    )


def verify_ft(
    g: Graph,
    sources: Sequence[int],
    candidate: Iterable[int],
    model: FaultModel = FaultModel.EDGE,
    workers: Optional[int] = None,
) -> VerifyResult:
    """
    Check dist(s, v, C - f) == dist(s, v, G - f) for every source, every
    fault of the model (all edges, or all vertices but s) plus no fault,
    and every target other than a failed vertex. INF == INF holds.

    Returns the first violation by (source order, fault, target). Faults
    that are critical neither in G nor in the candidate leave both
    distance tables as they are without the fault, so once the no-fault
    check passes only critical faults are recomputed.
    """
    sources = _check_sources(g, sources)
    kept = frozenset(candidate)
    for e in kept:
        if not 0 <= e < g.m:
            raise InvalidParameterError(f"candidate edge {e} is not an edge of the graph")

    full = g.view()
    cand = g.view(kept)
    checked = 0

    for s in sources:
        in_graph = bfs_distances(full, s)
        in_candidate = bfs_distances(cand, s)
        checked += 1
        violation = _first_mismatch(s, FaultScenario.no_fault(), in_candidate, in_graph)
        if violation is not None:
            return VerifyResult(ok=False, violation=violation, faults_checked=checked)

        critical = critical_faults(full, s, in_graph, model) | critical_faults(
            cand, s, in_candidate, model
        )
        faults = [
            FaultScenario.edge(x) if model is FaultModel.EDGE else FaultScenario.vertex(x)
            for x in sorted(critical)
            if model is FaultModel.EDGE or x != s
        ]
        checked += len(faults)

        check = partial(_check_fault, g, kept, s)
        violation = first_hit(check, faults, workers, chunksize=FAULT_CHUNK)
        if violation is not None:
            return VerifyResult(ok=False, violation=violation, faults_checked=checked)

    return VerifyResult(ok=True, faults_checked=checked)


def tight_in_edges(view: GraphView, s: int, dist: List[Distance]) -> Dict[int, FrozenSet[int]]:
    """Per reachable target other than s: edges to a neighbor one hop closer to s."""
    result: Dict[int, FrozenSet[int]] = {}
    for v in range(view.n):
        dv = dist[v]
        if v == s or dv == INF or not view.has_vertex(v):
            continue
        result[v] = frozenset(e for u, e in view.neighbors(v) if dist[u] == dv - 1)
    return result


def _source_requirements(
    g: Graph,
    s: int,
    model: FaultModel,
    distinct: bool,
) -> Iterator[Tuple[FaultScenario, int, FrozenSet[int]]]:
    full = g.view()
    dist = bfs_distances(full, s)
    base = tight_in_edges(full, s, dist)
    critical = critical_faults(full, s, dist, model)

    for v, edges in base.items():
        yield FaultScenario.no_fault(), v, edges

    for fault in iter_faults(g, model, source=s, include_none=False):
        if fault.element in critical:
            view = full.with_fault(fault)
            for v, edges in tight_in_edges(view, s, bfs_distances(view, s)).items():
                yield fault, v, edges
            continue

        # Distances are unchanged; only targets next to the failed element lose an edge.
        touched: Dict[int, FrozenSet[int]] = {}
        if model is FaultModel.EDGE:
            e = fault.element
            for v in g.endpoints(e):
                if v in base and e in base[v]:
                    touched[v] = base[v] - {e}
        else:
            for w, e in g.neighbors(fault.element):
                if w in base and e in base[w]:
                    touched[w] = base[w] - {e}
        if distinct:
            yield from ((fault, v, edges) for v, edges in touched.items())
        else:
            for v, edges in base.items():
                if v != fault.failed_vertex:
                    yield fault, v, touched.get(v, edges)


def tight_requirements(
    g: Graph,
    sources: Sequence[int],
    model: FaultModel = FaultModel.EDGE,
    distinct: bool = False,
) -> Iterator[Requirement]:
    """
    Every (source, fault, reachable target) constraint, faults in id order.

    With distinct=True, constraints equal to the target's no-fault
    constraint are yielded only once, under the no-fault scenario.
    """
    for s in _check_sources(g, sources):
        for fault, v, edges in _source_requirements(g, s, model, distinct):
            yield Requirement(source=s, fault=fault, target=v, edges=edges)
