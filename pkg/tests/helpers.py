"""Test oracles independent of the library's traversal code."""

from typing import Dict, Iterable, List, Optional, Sequence

import networkx as nx
import numpy as np

from ftbfs.generators import gen_random, is_connected
from ftbfs.graph import FaultModel, Graph


def to_nx(g: Graph, edge_ids: Optional[Iterable[int]] = None) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    ids = range(g.m) if edge_ids is None else edge_ids
    h.add_edges_from(g.endpoints(e) for e in ids)
    return h


def nx_distances(h: nx.Graph, s: int) -> Dict[int, int]:
    if s not in h:
        return {}
    return nx.single_source_shortest_path_length(h, s)


def literal_verify(
    g: Graph, sources: Sequence[int], candidate: Iterable[int], model: FaultModel
) -> bool:
    """The FT definition checked over every fault with networkx BFS."""
    kept = set(candidate)
    full = to_nx(g)
    cand = to_nx(g, kept)
    for s in sources:
        scenarios: List = [None]
        scenarios += list(range(g.m)) if model is FaultModel.EDGE else [v for v in range(g.n) if v != s]
        for f in scenarios:
            gf, cf = full.copy(), cand.copy()
            if f is not None:
                if model is FaultModel.EDGE:
                    u, v = g.endpoints(f)
                    gf.remove_edge(u, v)
                    if f in kept:
                        cf.remove_edge(u, v)
                else:
                    gf.remove_node(f)
                    cf.remove_node(f)
            dg, dc = nx_distances(gf, s), nx_distances(cf, s)
            if dg != dc:
                return False
    return True


def seeded_graphs(
    count: int,
    n_lo: int,
    n_hi: int,
    ps: Sequence[float],
    seed: int = 7,
    connected: bool = True,
) -> List[Graph]:
    """Deterministic sample of random graphs; n and p drawn from a fixed stream."""
    rng = np.random.default_rng(seed)
    graphs: List[Graph] = []
    draw = 0
    while len(graphs) < count:
        n = int(rng.integers(n_lo, n_hi + 1))
        p = float(ps[draw % len(ps)])
        g = gen_random(n, p, seed * 1000 + draw)
        draw += 1
        if connected and not is_connected(g):
            continue
        graphs.append(g)
    return graphs


def simple_paths(g: Graph, s: int, t: int, limit: int = 100000) -> List[List[int]]:
    """Edge-id lists of all simple s-t paths."""
    found: List[List[int]] = []

    def walk(v: int, seen: set, path: List[int]) -> None:
        if len(found) >= limit:
            return
        if v == t:
            found.append(list(path))
            return
        for w, e in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                path.append(e)
                walk(w, seen, path)
                path.pop()
                seen.discard(w)

    walk(s, {s}, [])
    return found
