"""Gen command implementation."""

from enum import Enum
from pathlib import Path
from typing import Optional

import typer

from ..config import Config
from ..cover import SAMPLE_COVER, read_setcover
from ..generators import (
    GeneratedInstance,
    gen_bad_example,
    gen_lb_multi,
    gen_lb_single,
    gen_random,
    gen_setcover_reduction,
    save_metadata,
)
from ..graph import save_graph
from .common import console, fail, handle_errors


class Family(str, Enum):
    LB_SINGLE = "lb-single"
    LB_MULTI = "lb-multi"
    REDUCTION = "reduction"
    BAD_EXAMPLE = "bad-example"
    RANDOM = "random"


def meta_path_for(out: Path) -> Path:
    return out.with_name(f"{out.stem}.meta.yaml")


def gen_command(
    family: Family = typer.Option(..., "--family", "-f", help="Graph family"),
    d: Optional[int] = typer.Option(None, "--d", help="Size parameter of lb-single, lb-multi, bad-example"),
    sigma: Optional[int] = typer.Option(None, "--sigma", help="Copies for lb-multi"),
    x_size: Optional[int] = typer.Option(None, "--x-size", help="Override |X|"),
    setcover: Optional[Path] = typer.Option(
        None, "--setcover", help="Set-cover file for reduction (default: the four-element example)"
    ),
    r: Optional[int] = typer.Option(None, "--R", help="Y-block size for reduction"),
    n: Optional[int] = typer.Option(None, "--n", help="Vertex count for random"),
    p: Optional[float] = typer.Option(None, "--p", help="Edge probability for random"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for random"),
    out: Path = typer.Option(..., "--out", "-o", help="Output graph file"),
    meta: Optional[Path] = typer.Option(
        None, "--meta", help="Metadata file (default: <out stem>.meta.yaml)"
    ),
) -> None:
    """Generate a graph family instance with its metadata sidecar."""
    defaults = Config().config.generators

    with handle_errors():
        if family in (Family.LB_SINGLE, Family.LB_MULTI, Family.BAD_EXAMPLE) and d is None:
            fail(f"--d is required for {family.value}")

        if family is Family.LB_SINGLE:
            size = x_size if x_size is not None else defaults.lb_x_factor * d * d
            inst = gen_lb_single(d, x_size=size)
        elif family is Family.LB_MULTI:
            inst = gen_lb_multi(d, sigma or defaults.multi_sigma, x_size=x_size)
        elif family is Family.BAD_EXAMPLE:
            size = x_size if x_size is not None else defaults.lb_x_factor * d * d
            inst = gen_bad_example(d, x_size=size)
        elif family is Family.REDUCTION:
            cover = read_setcover(setcover) if setcover is not None else SAMPLE_COVER
            inst = gen_setcover_reduction(cover, r if r is not None else defaults.reduction_r)
        else:
            if n is None:
                fail("--n is required for random")
            edge_prob = p if p is not None else defaults.random_p
            chosen_seed = seed if seed is not None else defaults.seed
            g = gen_random(n, edge_prob, chosen_seed)
            inst = GeneratedInstance(
                family="random",
                params={"n": n, "p": edge_prob, "seed": chosen_seed},
                graph=g,
                sources=[0],
                targets={"n": g.n, "m": g.m},
            )

        meta_file = meta or meta_path_for(out)
        save_graph(inst.graph, out)
        save_metadata(inst, meta_file)

    console.print(
        f"✅ {inst.family}: n={inst.graph.n} m={inst.graph.m} "
        f"sources={' '.join(str(s) for s in inst.sources)}"
    )
    console.print(f"Graph: {out}\nMetadata: {meta_file}")
