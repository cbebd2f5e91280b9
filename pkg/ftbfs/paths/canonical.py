"""Unweighted distances and canonical shortest-path trees over graph views."""

from collections import deque
from typing import FrozenSet, List, Optional, Set, Tuple

from ..graph import INF, Distance, FaultModel, GraphView
from .models import CanonCost, Ordering, SpTree


def _bfs(view: GraphView, s: int) -> Tuple[List[Distance], List[int]]:
    """Distances from s and the vertices in visiting order."""
    dist: List[Distance] = [INF] * view.n
    if not view.has_vertex(s):
        return dist, []
    adjacency = view.adjacency
    fe, fv = view.failed_edge, view.failed_vertex

    dist[s] = 0
    order = [s]
    queue = deque(order)
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w, e in adjacency[u]:
            if e == fe or w == fv or dist[w] != INF:
                continue
            dist[w] = du
            order.append(w)
            queue.append(w)
    return dist, order


def bfs_distances(view: GraphView, s: int) -> List[Distance]:
    """Hop distances from s in the view; INF for unreachable vertices."""
    if not 0 <= s < view.n:
        raise ValueError(f"source {s} outside 0..{view.n - 1}")
    return _bfs(view, s)[0]


def canonical_tree(view: GraphView, s: int) -> SpTree:
    """
    The unique minimum-CanonCost path tree from s.

    BFS layering fixes hop counts; a pass in visiting order then picks,
    for each vertex, the tight predecessor whose extended tie key is
    smallest. All candidates share the same hop count, so comparing tie
    keys alone decides.
    """
    if not 0 <= s < view.n:
        raise ValueError(f"source {s} outside 0..{view.n - 1}")
    dist, order = _bfs(view, s)
    n = view.n
    parent_edge: List[Optional[int]] = [None] * n
    parent: List[Optional[int]] = [None] * n
    cost: List[Optional[CanonCost]] = [None] * n
    if not order:
        return SpTree(s, parent_edge, parent, dist, cost)

    adjacency = view.adjacency
    fe, fv = view.failed_edge, view.failed_vertex
    keys: List[int] = [0] * n
    cost[s] = CanonCost.empty()

    for v in order[1:]:
        dv = dist[v] - 1
        best_key = -1
        best_edge = best_parent = -1
        for u, e in adjacency[v]:
            if e == fe or u == fv or dist[u] != dv:
                continue
            key = keys[u] | (1 << e)
            if best_key < 0 or key < best_key:
                best_key, best_edge, best_parent = key, e, u
        keys[v] = best_key
        parent_edge[v] = best_edge
        parent[v] = best_parent
        cost[v] = CanonCost(dist[v], best_key)

    return SpTree(s, parent_edge, parent, dist, cost)


def compare_costs(a: CanonCost, b: CanonCost) -> Ordering:
    """Three-way comparison: hops first, then tie keys as binary numbers."""
    if a == b:
        return Ordering.EQUAL
    return Ordering.LESS if a < b else Ordering.GREATER


def tree_path(tree: SpTree, v: int) -> List[int]:
    """Edge ids of the root-to-v tree path, root side first."""
    if not tree.reachable(v):
        raise ValueError(f"vertex {v} unreachable from {tree.root}")
    path = []
    while v != tree.root:
        path.append(tree.parent_edge[v])
        v = tree.parent[v]
    path.reverse()
    return path


def depth(tree: SpTree) -> int:
    """Largest finite distance in the tree."""
    return max((d for d in tree.dist if d != INF), default=0)


def critical_faults(
    view: GraphView,
    s: int,
    dist: List[Distance],
    model: FaultModel,
) -> FrozenSet[int]:
    """
    Faults whose removal changes some distance from s.

    A vertex keeps its distance as long as one tight in-edge survives, so
    only an edge that is the sole tight in-edge of its far endpoint (edge
    model), or a vertex that is the sole tight parent of some vertex
    (vertex model), can change the table. Any other fault leaves every
    remaining distance as it is.
    """
    adjacency = view.adjacency
    fe, fv = view.failed_edge, view.failed_vertex
    found: Set[int] = set()
    for v in range(view.n):
        dv = dist[v]
        if v == s or v == fv or dv == INF:
            continue
        sole: Optional[Tuple[int, int]] = None
        count = 0
        for u, e in adjacency[v]:
            if e == fe or u == fv or dist[u] != dv - 1:
                continue
            count += 1
            if count > 1:
                break
            sole = (u, e)
        if count == 1:
            u, e = sole
            if model is FaultModel.EDGE:
                found.add(e)
            elif u != s:
                found.add(u)
    return frozenset(found)
