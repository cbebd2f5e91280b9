"""Seeded Erdos-Renyi graphs."""

import numpy as np

from ..errors import InvalidParameterError
from ..graph import Graph


def gen_random(n: int, edge_prob: float, seed: int = 0) -> Graph:
    """
    G(n, p) from numpy's PCG64 generator.

    Pairs u < v are visited in lexicographic order and pair k is kept iff
    the k-th uniform draw is below p, so (n, p, seed) fixes the graph on
    every platform.
    """
    if n < 1:
        raise InvalidParameterError(f"n must be positive, got {n}")
    if not 0.0 <= edge_prob <= 1.0:
        raise InvalidParameterError(f"edge probability must lie in [0, 1], got {edge_prob}")
    if not 0 <= seed < 2**64:
        raise InvalidParameterError(f"seed must be a 64-bit unsigned integer, got {seed}")

    rng = np.random.Generator(np.random.PCG64(seed))
    us, vs = np.triu_indices(n, k=1)
    keep = rng.random(len(us)) < edge_prob
    return Graph.from_edges(n, list(zip(us[keep].tolist(), vs[keep].tolist())))


def is_connected(g: Graph) -> bool:
    """Whether every vertex is reachable from vertex 0."""
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w, _ in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def gen_random_connected(n: int, edge_prob: float, seed: int = 0, attempts: int = 1000) -> Graph:
    """First connected draw among seeds seed, seed+1, ..."""
    for offset in range(attempts):
        g = gen_random(n, edge_prob, seed + offset)
        if is_connected(g):
            return g
    raise InvalidParameterError(
        f"no connected G({n}, {edge_prob}) among {attempts} seeds from {seed}"
    )
