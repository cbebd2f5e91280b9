"""Experiment command implementation."""

from pathlib import Path
from typing import Optional

import typer

from ..config import Config
from ..cover import read_setcover
from ..errors import DegenerateFitError
from ..experiments import (
    SWEEPS,
    ExperimentOptions,
    ExperimentRunner,
    fit_scaling,
    stats_path,
    value_range,
    write_csv,
)
from ..graph import FaultModel
from .common import EXIT_VERIFY_FAILED, console, fail, handle_errors, resolve_threads


def experiment_command(
    family: str = typer.Option(..., "--family", "-f", help=f"One of: {', '.join(SWEEPS)}"),
    value_spec: str = typer.Option(..., "--range", "-r", help="Swept values LO:HI or LO:HI:STEP"),
    csv_file: Optional[Path] = typer.Option(
        None, "--csv", help="CSV output file; defaults to <workspace>/<family>.csv"
    ),
    fault: FaultModel = typer.Option(FaultModel.EDGE, "--fault", help="edge or vertex"),
    sigma: Optional[int] = typer.Option(None, "--sigma", help="Copies for lb-multi"),
    p: Optional[float] = typer.Option(None, "--p", help="Edge probability for random"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for random"),
    setcover: Optional[Path] = typer.Option(None, "--setcover", help="Set-cover file for reduction"),
    approx: bool = typer.Option(True, "--approx/--no-approx", help="Also run the approximation"),
    forced: bool = typer.Option(True, "--forced/--no-forced", help="Count forced edges"),
    fit: bool = typer.Option(False, "--fit", help="Print the log-log slope of forced edges vs n"),
    threads: Optional[int] = typer.Option(None, "--threads", "-t", help="Worker processes"),
) -> None:
    """Sweep a family over a parameter range and tabulate sizes, bounds and verification."""
    config = Config()
    defaults = config.config.generators

    with handle_errors():
        if family not in SWEEPS:
            fail(f"unknown family {family!r}; expected one of {', '.join(SWEEPS)}")
        values = value_range(value_spec)
        options = ExperimentOptions(
            fault_model=fault,
            sigma=sigma or defaults.multi_sigma,
            p=p if p is not None else defaults.random_p,
            seed=seed if seed is not None else defaults.seed,
            x_factor=defaults.lb_x_factor,
            setcover=read_setcover(setcover) if setcover is not None else None,
            approx=approx,
            forced=forced,
            workers=resolve_threads(threads),
        )
        runner = ExperimentRunner(family, values, options, show_progress=True)
        rows = runner.run()

        if csv_file is None:
            csv_file = config.workspace_root / f"{family}.csv"
        write_csv(rows, csv_file)
        console.print(f"✅ Wrote {len(rows)} rows: {csv_file}")
        if config.config.experiments.save_stats:
            runner.save_stats(stats_path(csv_file))

    runner.print_summary(rows)

    if fit:
        try:
            slope = fit_scaling(rows, "n", "forced_edges")
            console.print(f"scaling exponent (forced_edges vs n): {slope:.4f}")
        except DegenerateFitError as e:
            console.print(f"[yellow]No fit: {e}[/yellow]")

    if not all(row.verified for row in rows):
        raise typer.Exit(EXIT_VERIFY_FAILED)
