"""Generated instance models."""

from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..graph import Graph


class InstanceMetadata(BaseModel):
    """Everything about a generated instance except the graph itself."""

    family: str = Field(..., description="Family name, e.g. lb-single")
    params: Dict[str, Any] = Field(default_factory=dict, description="Generator parameters")
    sources: List[int] = Field(default_factory=list, description="Source vertices")
    groups: Dict[str, List[int]] = Field(
        default_factory=dict, description="Named vertex sets of the construction"
    )
    forced_families: Dict[str, List[int]] = Field(
        default_factory=dict, description="Named edge-id sets expected in every valid structure"
    )
    targets: Dict[str, int] = Field(default_factory=dict, description="Named counts")
    notes: List[str] = Field(default_factory=list, description="Construction remarks")


class GeneratedInstance(InstanceMetadata):
    """A generated graph with its metadata."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    graph: Graph = Field(..., description="The generated graph")

    def metadata(self) -> InstanceMetadata:
        return InstanceMetadata(**self.model_dump(exclude={"graph"}))

    def forced(self, name: str) -> frozenset:
        return frozenset(self.forced_families.get(name, []))


class GraphBuilder:
    """Incremental vertex and edge allocation; edge ids follow insertion order."""

    def __init__(self) -> None:
        self.n = 0
        self.edges: List[Tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def vertices(self, count: int) -> List[int]:
        return [self.vertex() for _ in range(count)]

    def edge(self, u: int, v: int) -> int:
        self.edges.append((u, v))
        return len(self.edges) - 1

    def path_from(self, start: int, length: int) -> List[int]:
        """Extend a path of length edges from start; returns its vertices, start first."""
        path = [start]
        for _ in range(length):
            w = self.vertex()
            self.edge(path[-1], w)
            path.append(w)
        return path

    def build(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)
