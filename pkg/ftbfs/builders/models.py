"""FT structure models."""

from typing import Dict, FrozenSet, List

from pydantic import BaseModel, Field

from ..graph import FaultModel


class FtStats(BaseModel):
    """Size statistics of a built structure."""

    n: int = Field(..., description="Vertex count of the host graph", ge=0)
    m: int = Field(..., description="Edge count of the host graph", ge=0)
    size: int = Field(..., description="Number of edges kept", ge=0)
    depth: Dict[int, int] = Field(default_factory=dict, description="Depth(s) per source")


class FtStructure(BaseModel):
    """A subgraph (edge-id set) that preserves distances from its sources under one fault."""

    sources: List[int] = Field(..., description="Source vertices in order")
    fault_model: FaultModel = Field(FaultModel.EDGE, description="Tolerated fault kind")
    edge_ids: FrozenSet[int] = Field(..., description="Edge ids kept")
    tree_edges: FrozenSet[int] = Field(
        default_factory=frozenset, description="Union of the no-fault canonical trees"
    )
    new_edges: Dict[int, FrozenSet[int]] = Field(
        default_factory=dict,
        description="Per-vertex edges added by replacement trees, outside the no-fault trees",
    )
    stats: FtStats = Field(..., description="Size statistics")

    @property
    def size(self) -> int:
        return len(self.edge_ids)

    def sorted_edges(self) -> List[int]:
        return sorted(self.edge_ids)
