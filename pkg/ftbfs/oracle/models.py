"""Verification result models."""

from typing import FrozenSet, Optional

from pydantic import BaseModel, Field

from ..graph import Distance, FaultScenario, INF


def format_distance(d: Distance) -> str:
    return "inf" if d == INF else str(int(d))


class Violation(BaseModel):
    """Witness that a candidate is not fault tolerant: one distance grew."""

    source: int = Field(..., description="Source vertex")
    fault: FaultScenario = Field(..., description="Failure scenario")
    target: int = Field(..., description="Vertex whose distance grew")
    dist_in_candidate: Distance = Field(..., description="Distance in candidate minus fault")
    dist_in_graph: Distance = Field(..., description="Distance in graph minus fault")

    def render(self) -> str:
        return (
            f"VIOLATION s={self.source} fault={self.fault.label()} v={self.target} "
            f"cand={format_distance(self.dist_in_candidate)} "
            f"graph={format_distance(self.dist_in_graph)}"
        )


class VerifyResult(BaseModel):
    """Outcome of checking a candidate against every fault."""

    ok: bool = Field(..., description="Whether every distance is preserved")
    violation: Optional[Violation] = Field(None, description="First violation, if any")
    faults_checked: int = Field(0, description="Fault scenarios evaluated explicitly")


class Requirement(BaseModel):
    """
    One (source, fault, target) constraint.

    A candidate preserves the target's distance under the fault iff it keeps
    at least one of these edges; each joins the target to a vertex one hop
    closer to the source in the faulted graph.
    """

    source: int
    fault: FaultScenario
    target: int
    edges: FrozenSet[int]
