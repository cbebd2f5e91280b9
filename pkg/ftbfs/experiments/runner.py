"""Experiment harness: generate, build, verify and measure one family over a parameter range."""

import csv
import json
import time
from functools import partial
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pendulum
from pydantic import BaseModel, ConfigDict, Field
from rich.console import Console
from rich.panel import Panel
from rich.progress import Progress, SpinnerColumn, TextColumn, TimeElapsedColumn
from rich.table import Table

from ..builders import build_ftmbfs, multi_size_bound, size_bound
from ..cover import SAMPLE_COVER, build_approx
from ..errors import InvalidParameterError
from ..generators import (
    GeneratedInstance,
    gen_bad_example,
    gen_lb_multi,
    gen_lb_single,
    gen_random,
    gen_setcover_reduction,
)
from ..graph import FaultModel
from ..oracle import necessary_edges, verify_ft
from ..parallel import iter_ordered, resolve_workers
from .models import COLUMNS, ExperimentRow, format_params

console = Console()

# Parameter each family sweeps over.
SWEEPS: Dict[str, str] = {
    "lb-single": "d",
    "lb-multi": "d",
    "bad-example": "d",
    "random": "n",
    "reduction": "R",
}


class ExperimentOptions(BaseModel):
    """Parameters held fixed across a sweep."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    fault_model: FaultModel = Field(FaultModel.EDGE, description="Tolerated fault kind")
    sigma: int = Field(2, description="Copies for lb-multi", ge=1)
    p: float = Field(0.3, description="Edge probability for random", ge=0.0, le=1.0)
    seed: int = Field(0, description="Seed for random", ge=0)
    x_factor: int = Field(8, description="|X| = x_factor * d^2 for lb-single and bad-example", ge=1)
    setcover: Optional[Any] = Field(None, description="SetCoverInstance for reduction")
    approx: bool = Field(True, description="Also run the set-cover approximation")
    forced: bool = Field(True, description="Count forced edges with the oracle")
    workers: Optional[int] = Field(None, description="Worker processes")


class ExperimentStage:
    """One timed step of a cell."""

    def __init__(self, name: str, description: str):
        self.name = name
        self.description = description
        self.start_time: Optional[float] = None
        self.end_time: Optional[float] = None
        self.success = False
        self.error: Optional[str] = None
        self.stats: Dict = {}

    def start(self):
        self.start_time = time.perf_counter()

    def complete(self, stats: Optional[Dict] = None):
        self.end_time = time.perf_counter()
        self.success = True
        if stats:
            self.stats.update(stats)

    def fail(self, error: str):
        self.end_time = time.perf_counter()
        self.success = False
        self.error = error

    @property
    def duration(self) -> float:
        """Stage duration in seconds."""
        if self.start_time is not None and self.end_time is not None:
            return self.end_time - self.start_time
        return 0.0

    def record(self) -> Dict:
        return {
            "duration": self.duration,
            "success": self.success,
            "error": self.error,
            "stats": self.stats,
        }


def generate_instance(family: str, value: int, options: ExperimentOptions) -> GeneratedInstance:
    """The instance of one sweep cell."""
    if family == "lb-single":
        return gen_lb_single(value, x_size=options.x_factor * value * value)
    if family == "lb-multi":
        return gen_lb_multi(value, options.sigma)
    if family == "bad-example":
        return gen_bad_example(value, x_size=options.x_factor * value * value)
    if family == "reduction":
        return gen_setcover_reduction(options.setcover or SAMPLE_COVER, value)
    if family == "random":
        g = gen_random(value, options.p, options.seed)
        return GeneratedInstance(
            family="random",
            params={"n": value, "p": options.p, "seed": options.seed},
            graph=g,
            sources=[0],
            targets={"n": g.n, "m": g.m},
        )
    raise InvalidParameterError(
        f"unknown family {family!r}; expected one of {', '.join(SWEEPS)}"
    )


def run_cell(
    family: str,
    options: ExperimentOptions,
    workers: Optional[int],
    value: int,
) -> Tuple[ExperimentRow, List[ExperimentStage]]:
    """
    Generate, build, verify and measure one sweep cell.

    Runs in a worker process when cells go side by side, so the stage
    records travel back with the row.
    """
    opts = options
    model = opts.fault_model
    stages = [
        ExperimentStage("generate", "Generating instance"),
        ExperimentStage("build", "Building exact structure"),
        ExperimentStage("approx", "Building approximate structure"),
        ExperimentStage("verify", "Verifying structures"),
        ExperimentStage("forced", "Counting forced edges"),
    ]
    started = time.perf_counter()

    def step(index: int, fn):
        stage = stages[index]
        stage.start()
        try:
            result = fn()
        except Exception as e:
            stage.fail(str(e))
            raise
        return stage, result

    stage, inst = step(0, lambda: generate_instance(family, value, opts))
    g, sources = inst.graph, inst.sources
    stage.complete({"n": g.n, "m": g.m})

    stage, exact = step(1, lambda: build_ftmbfs(g, sources, model, workers))
    stage.complete({"size": exact.size})

    approx = None
    if opts.approx:
        stage, approx = step(2, lambda: build_approx(g, sources, model, workers))
        stage.complete({"size": approx.size})

    def verify_all() -> bool:
        ok = verify_ft(g, sources, exact.edge_ids, model, workers).ok
        if approx is not None:
            ok = ok and verify_ft(g, sources, approx.edge_ids, model, workers).ok
        return ok

    stage, verified = step(3, verify_all)
    stage.complete({"verified": verified})

    forced = None
    if opts.forced:

        def count_forced() -> int:
            necessary = necessary_edges(g, sources, model)
            families = [set(es) for es in inst.forced_families.values()]
            if not families:
                return len(necessary)
            return len(necessary & set().union(*families))

        stage, forced = step(4, count_forced)
        stage.complete({"forced": forced})

    bound = None
    if model is FaultModel.EDGE:
        if len(sources) == 1:
            bound = size_bound(g.n, exact.stats.depth[sources[0]])
        else:
            bound = multi_size_bound(g.n, len(sources))

    row = ExperimentRow(
        family=family,
        params=format_params(dict(inst.params)),
        n=g.n,
        m=g.m,
        sources=" ".join(str(s) for s in sources),
        built_edges=exact.size,
        approx_edges=approx.size if approx is not None else None,
        ratio=exact.size / approx.size if approx is not None and approx.size else None,
        bound=bound,
        forced_edges=forced,
        verified=verified,
        wall_ms=(time.perf_counter() - started) * 1000.0,
    )
    return row, stages


class ExperimentRunner:
    """Runs one family over a list of parameter values."""

    def __init__(
        self,
        family: str,
        values: Sequence[int],
        options: Optional[ExperimentOptions] = None,
        show_progress: bool = True,
    ):
        if family not in SWEEPS:
            raise InvalidParameterError(
                f"unknown family {family!r}; expected one of {', '.join(SWEEPS)}"
            )
        self.family = family
        self.values = list(values)
        self.options = options or ExperimentOptions()
        self.show_progress = show_progress
        self.cell_stages: Dict[int, List[ExperimentStage]] = {}
        self.total_start_time: Optional[float] = None
        self.total_end_time: Optional[float] = None

    def run(self) -> List[ExperimentRow]:
        """Run every cell; rows come back in parameter order."""
        self.total_start_time = time.perf_counter()
        workers = resolve_workers(self.options.workers)
        # Cells run side by side; each cell then works in a single process.
        inner = 1 if workers > 1 and len(self.values) > 1 else workers
        sweep = SWEEPS[self.family]
        cell = partial(run_cell, self.family, self.options, inner)
        results = iter_ordered(cell, self.values, workers)
        rows: List[ExperimentRow] = []

        try:
            if not self.show_progress:
                for value, (row, stages) in zip(self.values, results):
                    self.cell_stages[value] = stages
                    rows.append(row)
                return rows

            with Progress(
                SpinnerColumn(),
                TextColumn("[progress.description]{task.description}"),
                TimeElapsedColumn(),
                console=console,
            ) as progress:
                task = progress.add_task(
                    f"{self.family}: {len(self.values)} cells", total=len(self.values)
                )
                for value, (row, stages) in zip(self.values, results):
                    self.cell_stages[value] = stages
                    rows.append(row)
                    progress.advance(task, 1)
                    progress.console.print(
                        f"[dim]{sweep}={value}: {row.built_edges} edges, "
                        f"verified={row.verified}, {row.wall_ms:.0f} ms[/dim]"
                    )
                return rows
        finally:
            self.total_end_time = time.perf_counter()

    def save_stats(self, path: Path) -> None:
        """Write per-cell stage durations and outcomes as JSON."""
        total = 0.0
        if self.total_start_time is not None and self.total_end_time is not None:
            total = self.total_end_time - self.total_start_time
        sweep = SWEEPS[self.family]
        stats = {
            "experiment": {
                "family": self.family,
                "sweep": sweep,
                "values": self.values,
                "fault_model": self.options.fault_model.value,
                "total_duration": total,
                "completed_at": pendulum.now().to_iso8601_string(),
            },
            "cells": {
                f"{sweep}={value}": {stage.name: stage.record() for stage in stages}
                for value, stages in sorted(self.cell_stages.items())
            },
        }
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            json.dump(stats, f, indent=2)

    def print_summary(self, rows: List[ExperimentRow]) -> None:
        table = Table(title=f"Experiment: {self.family}")
        table.add_column("Params", style="cyan")
        table.add_column("n", justify="right")
        table.add_column("m", justify="right")
        table.add_column("Built", justify="right", style="bold")
        table.add_column("Approx", justify="right")
        table.add_column("Ratio", justify="right")
        table.add_column("Bound", justify="right", style="yellow")
        table.add_column("Forced", justify="right")
        table.add_column("Verified")
        table.add_column("ms", justify="right", style="dim")

        for row in rows:
            table.add_row(
                row.params,
                str(row.n),
                str(row.m),
                str(row.built_edges),
                "-" if row.approx_edges is None else str(row.approx_edges),
                "-" if row.ratio is None else f"{row.ratio:.2f}",
                "-" if row.bound is None else str(row.bound),
                "-" if row.forced_edges is None else str(row.forced_edges),
                "[green]✓[/green]" if row.verified else "[red]✗[/red]",
                f"{row.wall_ms:.0f}",
            )
        console.print(table)

        failed = [row.params for row in rows if not row.verified]
        if failed:
            console.print(Panel(
                f"[red]Verification failed for: {', '.join(failed)}[/red]",
                style="red",
            ))


def write_csv(rows: Sequence[ExperimentRow], path: Path) -> None:
    """Write rows with the fixed header, in the given order."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow(row.to_csv())


def read_csv(path: Path) -> List[ExperimentRow]:
    with open(path, newline="") as f:
        return [ExperimentRow.from_csv(record) for record in csv.DictReader(f)]


def stats_path(csv_path: Path) -> Path:
    csv_path = Path(csv_path)
    return csv_path.with_name(f"{csv_path.stem}_stats.json")


def run_experiment(
    family: str,
    values: Sequence[int],
    options: Optional[ExperimentOptions] = None,
    csv_path: Optional[Path] = None,
    save_stats: bool = True,
    show_progress: bool = False,
) -> List[ExperimentRow]:
    """
    Run a sweep and return its rows in parameter order.

    With csv_path, rows go to that file and, if save_stats, the stage
    record goes next to it as <stem>_stats.json.
    """
    runner = ExperimentRunner(family, values, options, show_progress=show_progress)
    rows = runner.run()
    if csv_path is not None:
        write_csv(rows, csv_path)
        if save_stats:
            runner.save_stats(stats_path(csv_path))
    return rows
