"""Init command implementation."""

from pathlib import Path

import typer
from rich.panel import Panel

from ..config import ConfigModel, save_config
from .common import console


def init_command(
    config_dir: Path = typer.Option(
        Path.home() / ".config" / "ftbfs",
        "--config-dir",
        "-c",
        help="Configuration directory",
    ),
    workspace: Path = typer.Option(
        Path.home() / "ftbfs-experiments",
        "--workspace",
        "-w",
        help="Workspace root directory for experiment outputs",
    ),
    threads: int = typer.Option(1, "--threads", "-t", min=1, help="Default worker processes"),
    free_limit: int = typer.Option(25, "--free-limit", min=0, help="Oracle free-edge limit"),
    force: bool = typer.Option(False, "--force", help="Overwrite an existing config"),
) -> None:
    """Write a default ftbfs configuration."""
    console.print(Panel.fit("ftbfs - Initialization", style="bold blue"))

    config_path = config_dir / "config.yaml"
    if config_path.exists() and not force:
        console.print(f"[yellow]Config already exists: {config_path} (use --force)[/yellow]")
        raise typer.Exit(0)

    config = ConfigModel(
        parallel={"threads": threads},
        oracle={"free_limit": free_limit},
        experiments={"workspace_root": str(workspace)},
    )
    save_config(config, config_path)
    console.print(f"✅ Created config: {config_path}")

    workspace.mkdir(parents=True, exist_ok=True)
    console.print(f"✅ Created workspace: {workspace}")

    console.print(
        Panel(
            f"[green]✅ ftbfs initialized[/green]\n\n"
            f"Configuration: {config_path}\n"
            f"Workspace: {workspace}\n\n"
            f"Next steps:\n"
            f"1. Generate a graph: [bold]ftbfs gen --family lb-single --d 4 --out g.txt[/bold]\n"
            f"2. Build a structure: [bold]ftbfs build --graph g.txt --out h.txt[/bold]\n"
            f"3. Verify it: [bold]ftbfs verify --graph g.txt --candidate h.txt[/bold]",
            style="green",
        )
    )
