"""FT structure file format: '#' header, "u v" edge lines, trailing new-edge diagnostics."""

from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Set

from ..errors import StructureParseError
from ..graph import FaultModel, Graph
from ..graph.io import DECIMAL
from ..paths import canonical_tree, depth
from .models import FtStats, FtStructure

HEADER = "# ftbfs structure"


def write_structure(ft: FtStructure, g: Graph) -> str:
    """Render a structure; edges in EdgeId order."""
    lines = [
        HEADER,
        f"# sources: {' '.join(str(s) for s in ft.sources)}",
        f"# fault_model: {ft.fault_model.value}",
        f"# n: {g.n}",
        f"# m: {g.m}",
        f"# edges: {ft.size}",
    ]
    for e in ft.sorted_edges():
        u, v = g.endpoints(e)
        lines.append(f"{u} {v}")
    for v, es in sorted(ft.new_edges.items()):
        if es:
            ids = ",".join(str(e) for e in sorted(es))
            lines.append(f"# new {v}: {len(es)} edges={ids}")
    return "\n".join(lines) + "\n"


def _header_value(line: str) -> Optional[tuple]:
    body = line[1:].strip()
    if ":" not in body:
        return None
    key, _, value = body.partition(":")
    return key.strip(), value.strip()


def parse_structure(text: str, g: Graph) -> FtStructure:
    """
    Parse a structure written by write_structure against its host graph.

    Edge lines are mapped back to EdgeIds through the graph; a pair that is
    not an edge of g is an error, and so are n or m headers that disagree
    with g. Missing headers fall back to source 0 and the edge model.
    """
    sources: List[int] = []
    model = FaultModel.EDGE
    edge_ids: Set[int] = set()
    new_edges: Dict[int, FrozenSet[int]] = {}

    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            item = _header_value(line)
            if item is None:
                continue
            key, value = item
            try:
                if key == "sources":
                    sources = [int(tok) for tok in value.split()]
                elif key == "fault_model":
                    model = FaultModel(value)
                elif key in ("n", "m"):
                    declared = int(value)
                    actual = g.n if key == "n" else g.m
                    if declared != actual:
                        raise StructureParseError(
                            f"structure was written for a graph with {key}={declared}, "
                            f"this graph has {key}={actual} (line {number})"
                        )
                elif key.startswith("new "):
                    vertex = int(key[4:])
                    _, _, ids = value.partition("edges=")
                    new_edges[vertex] = frozenset(int(tok) for tok in ids.split(",") if tok)
            except StructureParseError:
                raise
            except ValueError as e:
                raise StructureParseError(f"bad header {line!r} at line {number}: {e}")
            continue

        parts = line.split()
        if len(parts) != 2:
            raise StructureParseError(f"expected 'u v' at line {number}, got {line!r}")
        if not all(DECIMAL.fullmatch(p) for p in parts):
            raise StructureParseError(f"non-integer edge at line {number}: {line!r}")
        u, v = int(parts[0]), int(parts[1])
        edge_id = g.edge_index(u, v) if 0 <= u < g.n and 0 <= v < g.n else None
        if edge_id is None:
            raise StructureParseError(f"({u}, {v}) at line {number} is not an edge of the graph")
        edge_ids.add(edge_id)

    if not sources:
        sources = [0]
    for s in sources:
        if not 0 <= s < g.n:
            raise StructureParseError(f"source {s} outside 0..{g.n - 1}")

    trees = [canonical_tree(g.view(), s) for s in sources]
    return FtStructure(
        sources=sources,
        fault_model=model,
        edge_ids=frozenset(edge_ids),
        tree_edges=frozenset().union(*(t.edge_set() for t in trees)),
        new_edges=new_edges,
        stats=FtStats(
            n=g.n,
            m=g.m,
            size=len(edge_ids),
            depth={t.root: depth(t) for t in trees},
        ),
    )


def read_structure(path: Path, g: Graph) -> FtStructure:
    return parse_structure(Path(path).read_text(encoding="utf-8"), g)


def save_structure(ft: FtStructure, g: Graph, path: Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(write_structure(ft, g), encoding="utf-8", newline="\n")
