"""Graph text format: '#' comments, an "n m" header, then m "u v" lines."""

import re
from pathlib import Path
from typing import Iterable, List, Set, TextIO, Tuple, Union

from ..errors import (
    CountMismatchError,
    DuplicateEdgeError,
    GraphParseError,
    HeaderError,
    SelfLoopError,
    VertexRangeError,
)
from .models import Graph

# ASCII decimal only; int() alone also takes underscores and other scripts' digits.
DECIMAL = re.compile(r"-?[0-9]+")


def _data_lines(text: Union[str, Iterable[str]]) -> Iterable[Tuple[int, str]]:
    """Yield (1-based line number, stripped line) for non-comment, non-blank lines."""
    lines = text.splitlines() if isinstance(text, str) else text
    for number, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line


def _parse_pair(line: str, number: int, what: str) -> Tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphParseError(f"expected two integers for {what}, got {line!r}", number)
    if not all(DECIMAL.fullmatch(p) for p in parts):
        raise GraphParseError(f"non-integer {what} {line!r}", number)
    return int(parts[0]), int(parts[1])


def parse_graph(text: Union[str, TextIO]) -> Graph:
    """
    Parse the graph text format.

    EdgeId is the order of the edge lines. Every error names its line.
    """
    if not isinstance(text, str):
        text = text.read()

    lines = iter(_data_lines(text))
    try:
        number, header = next(lines)
    except StopIteration:
        raise HeaderError("missing 'n m' header")
    n, m = _parse_pair(header, number, "header")
    if n < 0 or m < 0:
        raise HeaderError(f"negative counts in header {header!r}", number)

    edges: List[Tuple[int, int]] = []
    seen: Set[Tuple[int, int]] = set()
    last_line = number
    for number, line in lines:
        last_line = number
        if len(edges) == m:
            raise CountMismatchError(f"more than {m} edge lines", number)
        u, v = _parse_pair(line, number, "edge")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"vertex out of range 0..{n - 1} in {line!r}", number)
        if u == v:
            raise SelfLoopError("self-loop", number)
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            raise DuplicateEdgeError("duplicate edge", number)
        seen.add(pair)
        edges.append((u, v))

    if len(edges) != m:
        raise CountMismatchError(f"header declares {m} edges, found {len(edges)}", last_line)
    return Graph(n, edges)


def write_graph(g: Graph) -> str:
    """Canonical text: header plus one normalized "u v" line per edge, LF-terminated."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: Path) -> Graph:
    """Parse a graph file."""
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def save_graph(g: Graph, path: Path) -> None:
    """Write a graph file, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(write_graph(g), encoding="utf-8", newline="\n")
