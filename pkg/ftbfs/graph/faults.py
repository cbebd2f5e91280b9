"""Fault application and enumeration."""

from typing import Iterator, Optional, Union

from ..errors import FaultRangeError
from .models import FaultKind, FaultModel, FaultScenario, Graph, GraphView


def check_fault(g: Graph, fault: FaultScenario) -> None:
    """Raise FaultRangeError if the fault does not name an element of g."""
    if fault.kind is FaultKind.EDGE and fault.element >= g.m:
        raise FaultRangeError(f"edge fault {fault.element} outside 0..{g.m - 1}")
    if fault.kind is FaultKind.VERTEX and fault.element >= g.n:
        raise FaultRangeError(f"vertex fault {fault.element} outside 0..{g.n - 1}")


def apply_fault(g: Union[Graph, GraphView], fault: FaultScenario) -> GraphView:
    """
    Realize G minus {f} as a view.

    A view argument keeps its subgraph restriction; its own fault, if any,
    is replaced.
    """
    view = g.view() if isinstance(g, Graph) else g
    check_fault(view.graph, fault)
    return view.with_fault(fault)


def iter_faults(
    g: Graph,
    model: FaultModel,
    source: Optional[int] = None,
    include_none: bool = True,
) -> Iterator[FaultScenario]:
    """
    All faults of a model in id order, no-fault first.

    In the vertex model the source itself is never failed.
    """
    if include_none:
        yield FaultScenario.no_fault()
    if model is FaultModel.EDGE:
        for e in range(g.m):
            yield FaultScenario.edge(e)
    else:
        for v in range(g.n):
            if v != source:
                yield FaultScenario.vertex(v)
