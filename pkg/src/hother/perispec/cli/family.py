"""``perispec family``: spectral data of an affine family."""

from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer

from hother.perispec.cli.config import RunConfig, handled_errors, tolerance_of
from hother.perispec.cli.output import emit_json, render_spectral_points
from hother.perispec.family.codec import load_family
from hother.perispec.family.spectral import spectral_set


def family_command(
    ctx: typer.Context,
    path: Annotated[Path, typer.Argument(help="Family document {n, T, A}", show_default=False)],
    as_json: Annotated[bool, typer.Option("--json", help="Machine-readable report")] = False,
) -> None:
    """List the spectral points of D(mu) = T + mu A with det-multiplicity, kernel dimension, d and rank P."""
    config = RunConfig(command="family", inputs=(path,), tolerance=tolerance_of(ctx))
    with handled_errors():
        family = load_family(config.inputs[0], config.tolerance)
        points = spectral_set(family, config.tolerance)
    if as_json:
        emit_json({"n": family.dimension, "points": [point.model_dump(mode="json") for point in points]})
    else:
        render_spectral_points(points)
