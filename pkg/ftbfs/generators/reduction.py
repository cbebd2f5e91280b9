"""Set-cover reduction graphs: minimum FT-BFS size = |E~| + kappa* * R."""

from typing import Dict, List, Optional

from ..builders import FtStructure
from ..cover import SetCoverInstance, brute_set_cover
from ..errors import InvalidParameterError
from .models import GeneratedInstance, GraphBuilder

BRUTE_MAX_SETS = 20


def reduction_path_length(n_elements: int, i: int) -> int:
    """Edge count of the path hanging from p_{i-1}: 6 + 2(N - i)."""
    return 6 + 2 * (n_elements - i)


def gen_setcover_reduction(inst: SetCoverInstance, R: Optional[int] = None) -> GeneratedInstance:
    """
    Embed a set-cover instance under source p_0.

    A path p_0..p_{N+1} carries v' on p_N and the R vertices of Y on
    p_{N+1}. The path Q_i of length 6 + 2(N - i) runs from p_{i-1} to the
    element vertex z_i. Set vertex x_j meets z_i iff element i is in set j,
    and every x_j is joined to v', to p_{N+1} and to all of Y.

    Every edge outside the X-Y block is forced; each y needs X-neighbors
    forming a cover, so the minimum adds kappa* * R block edges. R=None
    uses (M*N)^3.
    """
    n_elements, n_sets = inst.n_elements, inst.n_sets
    if n_elements < 1 or n_sets < 1:
        raise InvalidParameterError(
            f"reduction needs N >= 1 and M >= 1, got N={n_elements} M={n_sets}"
        )
    if R is None:
        R = (n_sets * n_elements) ** 3
    if R < 1:
        raise InvalidParameterError(f"R must be positive, got {R}")

    b = GraphBuilder()
    p = b.path_from(b.vertex(), n_elements + 1)
    q_paths = [
        b.path_from(p[i - 1], reduction_path_length(n_elements, i))
        for i in range(1, n_elements + 1)
    ]
    z = [path[-1] for path in q_paths]
    v_prime = b.vertex()
    b.edge(p[n_elements], v_prime)
    ys = b.vertices(R)
    for y in ys:
        b.edge(p[n_elements + 1], y)

    xs = b.vertices(n_sets)
    position = {element: i for i, element in enumerate(inst.universe)}
    for j, members in enumerate(inst.sets):
        for i in sorted(position[e] for e in members):
            b.edge(xs[j], z[i])
    for x in xs:
        b.edge(v_prime, x)
    for x in xs:
        b.edge(p[n_elements + 1], x)
    e_tilde = len(b.edges)
    for x in xs:
        for y in ys:
            b.edge(x, y)

    g = b.build()
    groups: Dict[str, List[int]] = {
        "P": p,
        "Z": z,
        "X": xs,
        "Y": ys,
        "v_prime": [v_prime],
    }
    for i, path in enumerate(q_paths, 1):
        groups[f"Q{i}"] = path

    targets = {
        "N": n_elements,
        "M": n_sets,
        "R": R,
        "n": g.n,
        "m": g.m,
        "E_tilde": e_tilde,
        "E_XY": n_sets * R,
    }
    notes = []
    if n_sets <= BRUTE_MAX_SETS:
        kappa = len(brute_set_cover(inst))
        targets["kappa"] = kappa
        targets["cost"] = e_tilde + kappa * R
    else:
        notes.append(f"kappa not computed: more than {BRUTE_MAX_SETS} sets")

    return GeneratedInstance(
        family="reduction",
        params={"N": n_elements, "M": n_sets, "R": R},
        graph=g,
        sources=[p[0]],
        groups=groups,
        forced_families={"Etilde": list(range(e_tilde))},
        targets=targets,
        notes=notes,
    )


def cover_from_structure(instance: GeneratedInstance, ft: FtStructure) -> List[int]:
    """
    Set indices read off a valid structure of a reduction graph.

    Each y keeps X-neighbors that form a cover; the y with the fewest
    gives the smallest one.
    """
    g = instance.graph
    xs = instance.groups["X"]
    best: Optional[List[int]] = None
    for y in instance.groups["Y"]:
        chosen = [
            j
            for j, x in enumerate(xs)
            if g.edge_index(x, y) in ft.edge_ids
        ]
        if best is None or len(chosen) < len(best):
            best = chosen
    return best or []


def xy_block(instance: GeneratedInstance) -> List[int]:
    """Edge ids of the X-Y block, the only unforced edges."""
    return list(range(instance.targets["E_tilde"], instance.graph.m))
