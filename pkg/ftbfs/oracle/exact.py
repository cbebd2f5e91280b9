"""Forced edges and exact minimum FT structures on tiny graphs."""

from functools import partial
from itertools import combinations, islice
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from ..builders import FtStats, FtStructure
from ..errors import FtbfsError, InvalidParameterError, SearchSpaceTooLarge
from ..graph import FaultModel, Graph
from ..parallel import first_hit
from ..paths import canonical_tree, depth
from .verifier import tight_requirements, verify_ft

DEFAULT_FREE_LIMIT = 25
BATCH_SIZE = 4096


def necessary_edges(
    g: Graph,
    sources: Sequence[int],
    model: FaultModel = FaultModel.EDGE,
) -> FrozenSet[int]:
    """
    Edges whose removal alone breaks fault tolerance.

    Such an edge is the only one meeting some (source, fault, target)
    requirement, so it lies in every valid structure.
    """
    forced: Set[int] = set()
    for req in tight_requirements(g, sources, model, distinct=True):
        if len(req.edges) == 1:
            forced.update(req.edges)
    return frozenset(forced)


def _minimal_masks(masks: Iterable[int]) -> List[int]:
    """Drop masks that contain another mask; hitting the rest hits them too."""
    kept: List[int] = []
    for mask in sorted(set(masks), key=lambda x: (bin(x).count("1"), x)):
        if not any(k & mask == k for k in kept):
            kept.append(mask)
    return kept


def _hits_all(masks: List[int], chosen: Tuple[int, ...]) -> bool:
    subset = 0
    for i in chosen:
        subset |= 1 << i
    return all(mask & subset for mask in masks)


def _scan_batch(masks: List[int], batch: List[Tuple[int, ...]]) -> Optional[Tuple[int, ...]]:
    """First subset in the batch that hits every mask."""
    return next((chosen for chosen in batch if _hits_all(masks, chosen)), None)


def brute_min_ft(
    g: Graph,
    sources: Sequence[int],
    model: FaultModel = FaultModel.EDGE,
    forced: Optional[Iterable[int]] = None,
    free: Optional[Iterable[int]] = None,
    free_limit: int = DEFAULT_FREE_LIMIT,
    workers: Optional[int] = None,
) -> FtStructure:
    """
    Minimum-size structure containing forced, searching subsets of free.

    Subsets are tried by size, then lexicographically, so the first passing
    one is minimum and the smallest such edge-id set. Candidates are screened
    against the requirement masks and the winner is confirmed by verify_ft.
    """
    sources = list(sources)
    forced_set = frozenset(forced) if forced is not None else necessary_edges(g, sources, model)
    if free is None:
        free_edges = [e for e in range(g.m) if e not in forced_set]
    else:
        free_edges = sorted(set(free) - forced_set)
    if len(free_edges) > free_limit:
        raise SearchSpaceTooLarge(len(free_edges), free_limit)

    bit = {e: 1 << i for i, e in enumerate(free_edges)}
    raw_masks = []
    for req in tight_requirements(g, sources, model, distinct=True):
        if req.edges & forced_set:
            continue
        mask = 0
        for e in req.edges:
            mask |= bit.get(e, 0)
        if mask == 0:
            raise InvalidParameterError(
                f"no forced or free edge meets the requirement of target {req.target} "
                f"from source {req.source} under fault {req.fault.label()}"
            )
        raw_masks.append(mask)
    masks = _minimal_masks(raw_masks)

    scan = partial(_scan_batch, masks)

    def batches(k: int) -> Iterable[List[Tuple[int, ...]]]:
        combos = combinations(range(len(free_edges)), k)
        while True:
            batch = list(islice(combos, BATCH_SIZE))
            if not batch:
                return
            yield batch

    for k in range(len(free_edges) + 1):
        chosen = first_hit(scan, batches(k), workers)
        if chosen is None:
            continue
        edge_ids = forced_set | {free_edges[i] for i in chosen}
        result = verify_ft(g, sources, edge_ids, model, workers)
        if not result.ok:
            raise FtbfsError(
                f"requirement screen accepted a failing candidate: {result.violation.render()}"
            )
        trees = [canonical_tree(g.view(), s) for s in sources]
        return FtStructure(
            sources=sources,
            fault_model=model,
            edge_ids=edge_ids,
            tree_edges=frozenset().union(*(t.edge_set() for t in trees)),
            stats=FtStats(
                n=g.n,
                m=g.m,
                size=len(edge_ids),
                depth={t.root: depth(t) for t in trees},
            ),
        )

    raise InvalidParameterError("forced and free edges together admit no valid structure")
