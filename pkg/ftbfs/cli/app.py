"""Main CLI application."""

import typer
from dotenv import load_dotenv

# Load .env file if it exists
load_dotenv()

from .build import build_command
from .experiment import experiment_command
from .gen import gen_command
from .init import init_command
from .oracle import oracle_command
from .verify import verify_command

app = typer.Typer(
    name="ftbfs",
    help="Fault-tolerant BFS structures: build, verify, generate and measure",
    no_args_is_help=True,
)

# Register commands
app.command("init")(init_command)
app.command("build")(build_command)
app.command("verify")(verify_command)
app.command("gen")(gen_command)
app.command("oracle")(oracle_command)
app.command("experiment")(experiment_command)


if __name__ == "__main__":
    app()
