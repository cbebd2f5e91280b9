"""Shared CLI helpers: exit codes, error conversion, argument parsing."""

from contextlib import contextmanager
from enum import Enum
from typing import Iterator, List, NoReturn, Optional

import typer
from rich.console import Console

from ..config import Config
from ..errors import FtbfsError, SearchSpaceTooLarge

console = Console()

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class BuildMode(str, Enum):
    EXACT = "exact"
    APPROX = "approx"


def fail(message: str, code: int = EXIT_USAGE) -> NoReturn:
    """Print a one-line red reason and exit."""
    console.print(f"[red]Error:[/red] {message}", soft_wrap=True)
    raise typer.Exit(code)


@contextmanager
def handle_errors() -> Iterator[None]:
    """Map library errors to exit codes: resource limit 3, everything else 2."""
    try:
        yield
    except typer.Exit:
        raise
    except SearchSpaceTooLarge as e:
        fail(str(e), EXIT_RESOURCE)
    except (FtbfsError, ValueError, OSError) as e:
        fail(str(e), EXIT_USAGE)


def parse_sources(text: str) -> List[int]:
    """Comma- or space-separated vertex ids."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError("source list is empty")
    try:
        sources = [int(tok) for tok in tokens]
    except ValueError:
        raise ValueError(f"sources must be integers, got {text!r}")
    if len(set(sources)) != len(sources):
        raise ValueError(f"duplicate sources in {text!r}")
    return sources


def resolve_threads(threads: Optional[int]) -> int:
    """--threads, else FTBFS_THREADS, else the configured count."""
    if threads is not None:
        if threads < 1:
            raise ValueError(f"--threads must be positive, got {threads}")
        return threads
    return Config().threads
