"""Graph, fault scenario and graph view models."""

import math
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import DuplicateEdgeError, SelfLoopError, VertexRangeError

INF = math.inf

# Hop count, or INF for an unreachable vertex.
Distance = Union[int, float]

Adjacency = List[List[Tuple[int, int]]]


class FaultModel(str, Enum):
    """Which kind of single failure a structure must tolerate."""

    EDGE = "edge"
    VERTEX = "vertex"


class FaultKind(str, Enum):
    """Kind of a single failure scenario."""

    NONE = "none"
    EDGE = "edge"
    VERTEX = "vertex"


class FaultScenario(BaseModel):
    """One failed edge, one failed vertex, or no failure at all."""

    model_config = ConfigDict(frozen=True)

    kind: FaultKind = Field(FaultKind.NONE, description="Failure kind")
    element: Optional[int] = Field(None, description="Failed edge id or vertex id", ge=0)

    @model_validator(mode="after")
    def check_element(self) -> "FaultScenario":
        """Element is required for real failures and forbidden otherwise."""
        if self.kind is FaultKind.NONE and self.element is not None:
            raise ValueError("no-fault scenario carries no element")
        if self.kind is not FaultKind.NONE and self.element is None:
            raise ValueError(f"{self.kind.value} fault needs an element id")
        return self

    @classmethod
    def no_fault(cls) -> "FaultScenario":
        return cls()

    @classmethod
    def edge(cls, edge_id: int) -> "FaultScenario":
        return cls(kind=FaultKind.EDGE, element=edge_id)

    @classmethod
    def vertex(cls, vertex: int) -> "FaultScenario":
        return cls(kind=FaultKind.VERTEX, element=vertex)

    @property
    def failed_edge(self) -> int:
        """Failed edge id, or -1."""
        return self.element if self.kind is FaultKind.EDGE else -1

    @property
    def failed_vertex(self) -> int:
        """Failed vertex id, or -1."""
        return self.element if self.kind is FaultKind.VERTEX else -1

    def sort_key(self) -> Tuple[int, int]:
        """No-fault first, then by element id."""
        if self.kind is FaultKind.NONE:
            return (0, -1)
        return (1, self.element)

    def label(self) -> str:
        """Render as none, edge:<id> or vertex:<id>."""
        if self.kind is FaultKind.NONE:
            return "none"
        return f"{self.kind.value}:{self.element}"


class Graph:
    """
    Simple undirected graph with stable edge identities.

    Vertices are 0..n-1. The position of an edge in the edge sequence is
    its EdgeId, and that order drives canonical tie-breaking.
    """

    __slots__ = ("_n", "_edges", "_adjacency", "_index")

    def __init__(self, n: int, edges: Sequence[Tuple[int, int]]) -> None:
        if n < 0:
            raise VertexRangeError(f"vertex count must be nonnegative, got {n}")
        normalized: List[Tuple[int, int]] = []
        index: Dict[Tuple[int, int], int] = {}
        adjacency: Adjacency = [[] for _ in range(n)]

        for edge_id, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge {edge_id} ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"edge {edge_id} is a self-loop on {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in index:
                raise DuplicateEdgeError(f"edge {edge_id} duplicates edge {index[pair]}")
            index[pair] = edge_id
            normalized.append(pair)
            adjacency[u].append((v, edge_id))
            adjacency[v].append((u, edge_id))

        self._n = n
        self._edges: Tuple[Tuple[int, int], ...] = tuple(normalized)
        self._adjacency = adjacency
        self._index = index

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build from generated (u, v) pairs; edge ids follow the pair order."""
        return cls(n, [(int(u), int(v)) for u, v in edges])

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        """Normalized (u < v) endpoint pairs in EdgeId order."""
        return self._edges

    @property
    def adjacency(self) -> Adjacency:
        """Per-vertex (neighbor, edge id) lists, in edge id order."""
        return self._adjacency

    def endpoints(self, edge_id: int) -> Tuple[int, int]:
        return self._edges[edge_id]

    def neighbors(self, v: int) -> List[Tuple[int, int]]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def edge_index(self, u: int, v: int) -> Optional[int]:
        """EdgeId of {u, v}, or None."""
        return self._index.get((u, v) if u < v else (v, u))

    def view(self, edge_ids: Optional[FrozenSet[int]] = None) -> "GraphView":
        """View of the whole graph, or of the subgraph spanned by edge_ids."""
        if edge_ids is None:
            return GraphView(self, self._adjacency)
        allowed = frozenset(edge_ids)
        adjacency = [[(w, e) for w, e in row if e in allowed] for row in self._adjacency]
        return GraphView(self, adjacency)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __reduce__(self):
        # Worker processes rebuild adjacency and index from the edge list.
        return (Graph, (self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


class GraphView:
    """
    Read-only traversal handle over a graph, a subgraph and at most one fault.

    Failed elements are invisible to traversal; edge ids never change.
    """

    __slots__ = ("graph", "adjacency", "fault", "failed_edge", "failed_vertex")

    def __init__(
        self,
        graph: Graph,
        adjacency: Adjacency,
        fault: Optional[FaultScenario] = None,
    ) -> None:
        self.graph = graph
        self.adjacency = adjacency
        self.fault = fault or FaultScenario.no_fault()
        self.failed_edge = self.fault.failed_edge
        self.failed_vertex = self.fault.failed_vertex

    @property
    def n(self) -> int:
        return self.graph.n

    def with_fault(self, fault: FaultScenario) -> "GraphView":
        """Same subgraph, different fault."""
        return GraphView(self.graph, self.adjacency, fault)

    def has_vertex(self, v: int) -> bool:
        return v != self.failed_vertex

    def neighbors(self, v: int) -> Iterator[Tuple[int, int]]:
        """Traversable (neighbor, edge id) pairs of v."""
        if v == self.failed_vertex:
            return
        fe, fv = self.failed_edge, self.failed_vertex
        for w, e in self.adjacency[v]:
            if e != fe and w != fv:
                yield w, e

    def edge_ids(self) -> List[int]:
        """Traversable edge ids in ascending order."""
        seen = set()
        for v in range(self.n):
            for _, e in self.neighbors(v):
                seen.add(e)
        return sorted(seen)
