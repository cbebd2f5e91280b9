"""Verify command implementation."""

from pathlib import Path
from typing import Optional

import typer

from ..builders import read_structure
from ..graph import FaultModel, read_graph
from ..oracle import verify_ft
from .common import (
    EXIT_VERIFY_FAILED,
    console,
    handle_errors,
    parse_sources,
    resolve_threads,
)


def verify_command(
    graph: Path = typer.Option(..., "--graph", "-g", help="Graph file"),
    candidate: Path = typer.Option(..., "--candidate", "-c", help="Structure file to check"),
    sources: Optional[str] = typer.Option(
        None, "--sources", "-s", help="Source vertices; default: those recorded in the candidate"
    ),
    fault: Optional[FaultModel] = typer.Option(
        None, "--fault", help="edge or vertex; default: the candidate's model"
    ),
    threads: Optional[int] = typer.Option(None, "--threads", "-t", help="Worker processes"),
) -> None:
    """Check a candidate against every single fault; exit 1 on the first violation."""
    with handle_errors():
        g = read_graph(graph)
        ft = read_structure(candidate, g)
        source_list = parse_sources(sources) if sources is not None else ft.sources
        model = fault or ft.fault_model
        result = verify_ft(g, source_list, ft.edge_ids, model, resolve_threads(threads))

    if not result.ok:
        console.print(result.violation.render(), markup=False, highlight=False)
        raise typer.Exit(EXIT_VERIFY_FAILED)

    console.print(
        f"[green]OK[/green] {ft.size} edges, {len(source_list)} source(s), "
        f"{model.value} faults, {result.faults_checked} scenarios checked"
    )
