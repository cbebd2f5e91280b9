"""Oracle command implementation."""

from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from ..config import Config
from ..generators import load_metadata
from ..graph import FaultModel, read_graph
from ..oracle import brute_min_ft, necessary_edges
from .common import console, handle_errors, parse_sources, resolve_threads


def oracle_command(
    graph: Path = typer.Option(..., "--graph", "-g", help="Graph file"),
    sources: Optional[str] = typer.Option(
        None, "--sources", "-s", help="Source vertices (default: metadata sources, else 0)"
    ),
    fault: FaultModel = typer.Option(FaultModel.EDGE, "--fault", help="edge or vertex"),
    free_limit: Optional[int] = typer.Option(
        None, "--free-limit", "-k", min=0, help="Largest free-edge count to search"
    ),
    meta: Optional[Path] = typer.Option(
        None, "--meta", help="Metadata sidecar; its forced families become the forced set"
    ),
    threads: Optional[int] = typer.Option(None, "--threads", "-t", help="Worker processes"),
) -> None:
    """Compute the minimum FT structure by exhaustive search."""
    limit = free_limit if free_limit is not None else Config().config.oracle.free_limit

    with handle_errors():
        g = read_graph(graph)
        forced = None
        default_sources = [0]
        if meta is not None:
            info = load_metadata(meta)
            if info.sources:
                default_sources = info.sources
            if info.forced_families:
                forced = frozenset().union(*(frozenset(es) for es in info.forced_families.values()))
        source_list = parse_sources(sources) if sources is not None else default_sources
        if forced is None:
            forced = necessary_edges(g, source_list, fault)
        ft = brute_min_ft(
            g,
            source_list,
            fault,
            forced=forced,
            free_limit=limit,
            workers=resolve_threads(threads),
        )

    table = Table(title="Oracle Result")
    table.add_column("Field", style="cyan")
    table.add_column("Value", style="bold")
    table.add_row("Graph", f"n={g.n} m={g.m}")
    table.add_row("Forced edges", str(len(forced)))
    table.add_row("Free edges", str(g.m - len(forced)))
    table.add_row("Minimum size", str(ft.size))
    console.print(table)

    console.print(f"minimum={ft.size}")
    console.print("edges=" + " ".join(f"{u}-{v}" for u, v in (g.endpoints(e) for e in ft.sorted_edges())))
