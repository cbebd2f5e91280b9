"""Graph on which the exact builder keeps the whole leaf block but a linear-size structure exists."""

from typing import Dict, List, Optional

from ..errors import InvalidParameterError
from .lower_bounds import X_FACTOR, path_length
from .models import GeneratedInstance, GraphBuilder


def gen_bad_example(d: int, x_size: Optional[int] = None) -> GeneratedInstance:
    """
    The single-source lower-bound graph plus a shortcut leaf z_0.

    z_0 is joined to every x. The last edge of each path P_i is split by a
    vertex r_i, and z_0 is joined to every r_i. Routing through z_0 ties
    with routing through z_i, and the z_0 edges take the largest ids, so
    canonical tie-breaking prefers z_i and the exact builder keeps every
    (x, z_i) edge while x -- z_0 edges alone would do.
    """
    if d < 2:
        raise InvalidParameterError(f"d must be at least 2, got {d}")
    x_count = X_FACTOR * d * d if x_size is None else x_size
    if x_count < d:
        raise InvalidParameterError(f"|X| must be at least d={d}, got {x_count}")

    b = GraphBuilder()
    spine = b.path_from(b.vertex(), d)
    hub = spine[-1]
    paths = []
    splits = []
    for j in range(1, d + 1):
        path = b.path_from(spine[j - 1], path_length(d, j) - 1)
        r = b.vertex()
        z = b.vertex()
        b.edge(path[-1], r)
        b.edge(r, z)
        paths.append(path + [r, z])
        splits.append(r)
    leaves = [p[-1] for p in paths]
    xs = b.vertices(x_count)
    z0 = b.vertex()

    block: Dict[tuple, int] = {}
    for j, z in enumerate(leaves):
        block[(xs[j], z)] = b.edge(xs[j], z)
    for x in xs:
        b.edge(hub, x)
    for x in xs:
        for z in leaves:
            if (x, z) not in block:
                block[(x, z)] = b.edge(x, z)
    shortcut = [b.edge(z0, r) for r in splits]
    shortcut += [b.edge(z0, x) for x in xs]

    g = b.build()
    groups: Dict[str, List[int]] = {
        "pi": spine,
        "v_star": [hub],
        "Z": leaves,
        "X": xs,
        "z0": [z0],
        "r": splits,
    }
    for j, p in enumerate(paths, 1):
        groups[f"P{j}"] = p

    return GeneratedInstance(
        family="bad-example",
        params={"d": d, "x_size": x_count},
        graph=g,
        sources=[spine[0]],
        groups=groups,
        targets={
            "d": d,
            "n": g.n,
            "m": g.m,
            "X": x_count,
            "B_edges": len(block),
            "shortcut_edges": len(shortcut),
        },
        notes=["no leaf-block edge is forced: every x can relay through z_0"],
    )
