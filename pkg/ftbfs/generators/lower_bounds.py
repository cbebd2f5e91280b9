"""Lower-bound families: single-source gadget and its multi-source copies."""

from typing import Dict, List, Optional

from ..errors import InvalidParameterError
from .models import GeneratedInstance, GraphBuilder

X_FACTOR = 8


def path_length(d: int, j: int) -> int:
    """Edge count of the j-th gadget path (1-based): 6 + 2(d - j)."""
    return 6 + 2 * (d - j)


def gadget_size(d: int) -> int:
    """Vertices of one copy: a d-vertex spine plus its d hanging paths."""
    return d + sum(path_length(d, j) for j in range(1, d + 1))


def _check_d(d: int) -> None:
    if d < 2:
        raise InvalidParameterError(f"d must be at least 2, got {d}")


def gen_lb_single(d: int, x_size: Optional[int] = None) -> GeneratedInstance:
    """
    Single-source lower-bound graph.

    A spine v_1..v_{d+1} ends at the hub v* = v_{d+1}. Path P_j of length
    6 + 2(d - j) hangs from v_j and ends at the leaf z_j. Every x in X is
    joined to v* and to every leaf. Failing the spine edge after v_j makes
    z_j the unique relay to all of X, so each of the d*|X| leaf edges is
    forced.

    Edges are numbered spine, paths, (x_j, z_j) for j <= d, hub edges, then
    the rest of the bipartite block; the canonical tree then hangs z_j
    below x_j.
    """
    _check_d(d)
    x_count = X_FACTOR * d * d if x_size is None else x_size
    if x_count < d:
        raise InvalidParameterError(f"|X| must be at least d={d}, got {x_count}")

    b = GraphBuilder()
    spine = b.path_from(b.vertex(), d)
    hub = spine[-1]
    paths = [b.path_from(spine[j - 1], path_length(d, j)) for j in range(1, d + 1)]
    leaves = [p[-1] for p in paths]
    xs = b.vertices(x_count)

    block: Dict[tuple, int] = {}
    for j, z in enumerate(leaves):
        block[(xs[j], z)] = b.edge(xs[j], z)
    hub_edges = [b.edge(hub, x) for x in xs]
    for x in xs:
        for z in leaves:
            if (x, z) not in block:
                block[(x, z)] = b.edge(x, z)

    g = b.build()
    q_exact = len(spine) + sum(len(p) - 1 for p in paths)
    groups: Dict[str, List[int]] = {
        "pi": spine,
        "v_star": [hub],
        "Z": leaves,
        "X": xs,
    }
    for j, p in enumerate(paths, 1):
        groups[f"P{j}"] = p

    return GeneratedInstance(
        family="lb-single",
        params={"d": d, "x_size": x_count},
        graph=g,
        sources=[spine[0]],
        groups=groups,
        forced_families={"B": sorted(block.values())},
        targets={
            "d": d,
            "n": g.n,
            "m": g.m,
            "X": x_count,
            "Q": d * d + 7 * d,
            "Q_exact": q_exact,
            "E_hat": d * x_count,
            "hub_edges": len(hub_edges),
        },
        notes=[
            "Q is the nominal d^2+7d; Q_exact counts spine and path vertices once each",
            "E_hat is d*|X|, the size of the leaf block X x Z",
        ],
    )


def gen_lb_multi(d: int, sigma: int, x_size: Optional[int] = None) -> GeneratedInstance:
    """
    sigma copies of the gadget G(d) sharing the hub v* and the set X.

    Copy i has a spine u_1..u_d with path Q_j of length 6 + 2(d - j) from
    u_j to its leaf. The copy's source is u_1 and u_d is joined to v*.
    X is joined to v* and completely to the leaves of every copy. With
    sigma = 1 this is the single-source graph.
    """
    _check_d(d)
    if sigma < 1:
        raise InvalidParameterError(f"sigma must be positive, got {sigma}")
    x_count = sigma * gadget_size(d) if x_size is None else x_size
    if x_count < sigma * d:
        raise InvalidParameterError(f"|X| must be at least sigma*d={sigma * d}, got {x_count}")

    b = GraphBuilder()
    hub = b.vertex()
    groups: Dict[str, List[int]] = {"v_star": [hub]}
    sources: List[int] = []
    all_leaves: List[int] = []
    for i in range(1, sigma + 1):
        spine = b.path_from(b.vertex(), d - 1)
        b.edge(spine[-1], hub)
        paths = [b.path_from(spine[j - 1], path_length(d, j)) for j in range(1, d + 1)]
        leaves = [p[-1] for p in paths]
        sources.append(spine[0])
        all_leaves.extend(leaves)
        groups[f"copy{i}"] = spine + [v for p in paths for v in p[1:]]
        groups[f"leaves{i}"] = leaves

    xs = b.vertices(x_count)
    cross: Dict[tuple, int] = {}
    for k, z in enumerate(all_leaves):
        cross[(xs[k], z)] = b.edge(xs[k], z)
    for x in xs:
        b.edge(hub, x)
    for x in xs:
        for z in all_leaves:
            if (x, z) not in cross:
                cross[(x, z)] = b.edge(x, z)

    g = b.build()
    groups["X"] = xs
    groups["roots"] = sources

    return GeneratedInstance(
        family="lb-multi",
        params={"d": d, "sigma": sigma, "x_size": x_count},
        graph=g,
        sources=sources,
        groups=groups,
        forced_families={"cross": sorted(cross.values())},
        targets={
            "d": d,
            "sigma": sigma,
            "n": g.n,
            "m": g.m,
            "X": x_count,
            "copy_size": gadget_size(d),
            "leaves_per_copy": d,
            "cross_edges": sigma * d * x_count,
        },
    )
