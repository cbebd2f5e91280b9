"""Standalone set-cover file format: "N M", then one line of element indices per set."""

from pathlib import Path
from typing import List, Union

from ..errors import SetCoverParseError
from ..graph.io import DECIMAL
from .models import SetCoverInstance


def _parse_int(token: str, number: int) -> int:
    if not DECIMAL.fullmatch(token):
        raise SetCoverParseError(f"expected an integer, got {token!r} at line {number}")
    return int(token)


def parse_setcover(text: str) -> SetCoverInstance:
    """
    Parse a set-cover file. Elements are 0..N-1 and set j is named j.

    Lines starting with '#' are comments. A blank line is an empty set;
    blank lines after the M-th set are ignored.
    """
    rows = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), 1)
        if not line.strip().startswith("#")
    ]
    while rows and not rows[0][1]:
        rows.pop(0)
    if not rows:
        raise SetCoverParseError("missing 'N M' header")

    number, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise SetCoverParseError(f"header must be 'N M' at line {number}")
    n_elements, n_sets = (_parse_int(p, number) for p in parts)
    if n_elements < 0 or n_sets < 0:
        raise SetCoverParseError(f"negative count in header at line {number}")

    body = rows[1:]
    while len(body) > n_sets and not body[-1][1]:
        body.pop()
    if len(body) != n_sets:
        raise SetCoverParseError(f"header declares {n_sets} sets, found {len(body)}")

    sets: List[frozenset] = []
    for number, line in body:
        members = set()
        for token in line.split():
            x = _parse_int(token, number)
            if not 0 <= x < n_elements:
                raise SetCoverParseError(
                    f"element {x} outside 0..{n_elements - 1} at line {number}"
                )
            members.add(x)
        sets.append(frozenset(members))

    return SetCoverInstance(universe=list(range(n_elements)), sets=sets)


def write_setcover(inst: SetCoverInstance) -> str:
    """Render an instance whose universe is 0..N-1."""
    if inst.universe != list(range(inst.n_elements)):
        raise ValueError("only instances over elements 0..N-1 can be written")
    lines = [f"{inst.n_elements} {inst.n_sets}"]
    lines.extend(" ".join(str(x) for x in sorted(s)) for s in inst.sets)
    return "\n".join(lines) + "\n"


def read_setcover(path: Union[str, Path]) -> SetCoverInstance:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise SetCoverParseError(f"cannot read {path}: {e}")
    return parse_setcover(text)


def save_setcover(inst: SetCoverInstance, path: Union[str, Path]) -> None:
    Path(path).write_text(write_setcover(inst))


# Four elements, five sets; the optimum cover has two sets.
SAMPLE_COVER = SetCoverInstance(
    universe=[0, 1, 2, 3],
    sets=[
        frozenset({0, 2, 3}),
        frozenset({0, 2}),
        frozenset({1, 3}),
        frozenset({2}),
        frozenset({0, 3}),
    ],
)
