"""The ``perispec`` command-line application."""

from __future__ import annotations

import logging
import sys
from typing import Annotated

import typer
from pydantic import ValidationError

from hother.perispec.cli.config import ExitCode
from hother.perispec.cli.ep import ep_app
from hother.perispec.cli.family import family_command
from hother.perispec.cli.seifert import seifert_app
from hother.perispec.numerics.tolerance import DEFAULT_TOLERANCE

app = typer.Typer(
    name="perispec",
    help="Index, spectral flow and Seifert invariant computations.",
    add_completion=False,
    no_args_is_help=True,
)
app.command("family")(family_command)
app.add_typer(ep_app)
app.add_typer(seifert_app)


@app.callback()
def main(
    ctx: typer.Context,
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Log computation events to stderr")] = False,
    rank_threshold: Annotated[
        float | None, typer.Option("--rank-threshold", help="Relative singular-value cutoff for rank")
    ] = None,
    zero_guard: Annotated[
        float | None, typer.Option("--zero-guard", help="Minimum distance from circles to spectral points")
    ] = None,
    quadrature_tol: Annotated[
        float | None, typer.Option("--quadrature-tol", help="Target change between successive quadratures")
    ] = None,
) -> None:
    """Configure logging and tolerances for every subcommand."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s - %(name)s - %(message)s",
        force=True,
    )
    try:
        ctx.obj = DEFAULT_TOLERANCE.override(
            rank_threshold=rank_threshold,
            zero_guard=zero_guard,
            quadrature_tol=quadrature_tol,
        )
    except ValidationError as exc:
        typer.echo(f"error: invalid tolerance: {exc.errors()[0]['msg']}", err=True)
        raise typer.Exit(code=ExitCode.BAD_INPUT) from exc
