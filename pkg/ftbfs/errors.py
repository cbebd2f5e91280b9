"""Exception types shared across ftbfs."""

from typing import Optional


class FtbfsError(Exception):
    """Base class for all ftbfs errors."""


class GraphParseError(FtbfsError, ValueError):
    """Malformed graph text."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        if line is not None:
            message = f"{message} at line {line}"
        super().__init__(message)


class HeaderError(GraphParseError):
    """Missing or malformed "n m" header."""


class SelfLoopError(GraphParseError):
    """Edge with identical endpoints."""


class DuplicateEdgeError(GraphParseError):
    """Unordered pair listed twice."""


class VertexRangeError(GraphParseError):
    """Endpoint outside 0..n-1."""


class CountMismatchError(GraphParseError):
    """Number of edge lines differs from the header."""


class StructureParseError(FtbfsError, ValueError):
    """Malformed FT structure file."""


class SetCoverParseError(FtbfsError, ValueError):
    """Malformed set-cover file."""


class FaultRangeError(FtbfsError, ValueError):
    """Fault id outside the graph."""


class InvalidParameterError(FtbfsError, ValueError):
    """Parameter outside its documented range."""


class UncoverableInstanceError(FtbfsError, ValueError):
    """Some universe element belongs to no set."""


class SearchSpaceTooLarge(FtbfsError):
    """Exhaustive search exceeds the configured limit."""

    def __init__(self, free_edges: int, limit: int) -> None:
        self.free_edges = free_edges
        self.limit = limit
        super().__init__(
            f"search space too large: {free_edges} free edges exceeds limit {limit}"
        )


class DegenerateFitError(FtbfsError, ValueError):
    """Too few or nonpositive points for a log-log fit."""
