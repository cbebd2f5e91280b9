"""CLI commands for ftbfs."""

from .app import app

__all__ = ["app"]
