"""Build command implementation."""

from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from ..builders import build_ftmbfs, multi_size_bound, save_structure, size_bound
from ..cover import build_approx
from ..graph import FaultModel, read_graph
from .common import BuildMode, console, handle_errors, parse_sources, resolve_threads


def build_command(
    graph: Path = typer.Option(..., "--graph", "-g", help="Graph file"),
    sources: str = typer.Option("0", "--sources", "-s", help="Source vertices, e.g. 0,3"),
    mode: BuildMode = typer.Option(BuildMode.EXACT, "--mode", help="exact or approx"),
    fault: FaultModel = typer.Option(FaultModel.EDGE, "--fault", help="edge or vertex"),
    out: Path = typer.Option(..., "--out", "-o", help="Output structure file"),
    threads: Optional[int] = typer.Option(None, "--threads", "-t", help="Worker processes"),
) -> None:
    """Build an FT-BFS / FT-MBFS structure and write it to a file."""
    with handle_errors():
        g = read_graph(graph)
        source_list = parse_sources(sources)
        workers = resolve_threads(threads)

        if mode is BuildMode.EXACT:
            ft = build_ftmbfs(g, source_list, fault, workers)
        else:
            ft = build_approx(g, source_list, fault, workers)
        save_structure(ft, g, out)

    bound = None
    if fault is FaultModel.EDGE:
        if len(source_list) == 1:
            bound = size_bound(g.n, ft.stats.depth[source_list[0]])
        else:
            bound = multi_size_bound(g.n, len(source_list))

    table = Table(title="Build Summary")
    table.add_column("Field", style="cyan")
    table.add_column("Value", style="bold")
    table.add_row("Mode", mode.value)
    table.add_row("Fault model", fault.value)
    table.add_row("Sources", " ".join(str(s) for s in source_list))
    table.add_row("Graph", f"n={g.n} m={g.m}")
    table.add_row("Edges kept", str(ft.size))
    table.add_row("Bound", "-" if bound is None else str(bound))
    table.add_row("Output", str(out))
    console.print(table)
    console.print(f"size={ft.size} bound={'-' if bound is None else bound}")
