"""``perispec ep``: weighted index, index change and spectral flow of Laurent symbols."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Annotated

import typer
from pydantic import ValidationError

from hother.perispec.cli.config import THREADS_ENVVAR, ExitCode, RunConfig, handled_errors, tolerance_of
from hother.perispec.cli.output import console, emit_json, render_events, render_zeros
from hother.perispec.core.exceptions import InvalidInputError
from hother.perispec.endperiodic.codec import load_cap, load_path, load_symbol, write_curves_csv, write_events_csv
from hother.perispec.endperiodic.flow import spectral_flow
from hother.perispec.endperiodic.operator import (
    EndPeriodicOperator,
    d_value,
    index,
    index_change,
    symbol_zeros,
    truncation_kernels,
)
from hother.perispec.endperiodic.sweep import index_change_sweep
from hother.perispec.numerics.linalg import complex_to_pair

ep_app = typer.Typer(name="ep", help="End-periodic operators given by Laurent symbols.", no_args_is_help=True)

SymbolArgument = Annotated[Path, typer.Argument(help="Symbol document {n, k_min, k_max, blocks}", show_default=False)]
JsonOption = Annotated[bool, typer.Option("--json", help="Machine-readable output")]


def _parse_annulus(text: str | None) -> tuple[float, float] | None:
    if text is None:
        return None
    parts = text.split(",")
    try:
        r_min, r_max = (float(part) for part in parts)
    except ValueError as exc:
        raise InvalidInputError(reason=f"--annulus expects 'r_min,r_max', got {text!r}") from exc
    if not 0.0 <= r_min < r_max:
        raise InvalidInputError(reason=f"--annulus needs 0 <= r_min < r_max, got {text!r}")
    return r_min, r_max


@ep_app.command("index")
def index_command(
    ctx: typer.Context,
    path: SymbolArgument,
    delta: Annotated[float, typer.Option("--delta", help="Weight of the sequence space")] = 0.0,
    cap: Annotated[Path | None, typer.Option("--cap", help="Cap document: list of {row, col, block}")] = None,
    truncate: Annotated[bool, typer.Option("--truncate", help="Also count kernels of dense truncations")] = False,
    as_json: JsonOption = False,
) -> None:
    """Print the Fredholm index on the e^(delta n)-weighted half-line."""
    inputs = (path,) if cap is None else (path, cap)
    config = RunConfig(command="ep index", inputs=inputs, tolerance=tolerance_of(ctx))
    with handled_errors():
        symbol_document, *cap_documents = config.inputs
        symbol = load_symbol(symbol_document, config.tolerance)
        entries = load_cap(cap_documents[0]) if cap_documents else ()
        op = EndPeriodicOperator(symbol=symbol, delta=delta, cap=entries)
        value = index(op, config.tolerance)
        truncation = truncation_kernels(op, tol=config.tolerance) if truncate else None
    if as_json:
        data: dict[str, object] = {"delta": delta, "index": value}
        if truncation is not None:
            data["truncation"] = {
                "ker_dim": truncation.ker_dim,
                "coker_dim": truncation.coker_dim,
                "sites": truncation.sites,
            }
        emit_json(data)
        return
    typer.echo(str(value))
    if truncation is not None:
        typer.echo(f"truncation: ker {truncation.ker_dim}, coker {truncation.coker_dim}, N = {truncation.sites}")


@ep_app.command("index-change")
def index_change_command(
    ctx: typer.Context,
    path: SymbolArgument,
    delta: Annotated[float, typer.Option("--delta", help="Inner weight")],
    delta2: Annotated[float, typer.Option("--delta2", help="Outer weight")],
    as_json: JsonOption = False,
) -> None:
    """Print index(delta) - index(delta2) as the sum of d over the zeros between the circles."""
    config = RunConfig(command="ep index-change", inputs=(path,), tolerance=tolerance_of(ctx))
    with handled_errors():
        symbol = load_symbol(config.inputs[0], config.tolerance)
        change = index_change(symbol, delta, delta2, config.tolerance)
        zeros = symbol_zeros(symbol, math.exp(delta), math.exp(delta2), config.tolerance) if delta < delta2 else []
        rows = [(z, multiplicity, d_value(symbol, z, config.tolerance)) for z, multiplicity in zeros]
    if as_json:
        emit_json(
            {
                "delta": delta,
                "delta2": delta2,
                "index_change": change,
                "zeros": [{"z": complex_to_pair(z), "det_multiplicity": m, "d": d} for z, m, d in rows],
            }
        )
        return
    typer.echo(str(change))
    if rows:
        render_zeros(rows)


@ep_app.command("flow")
def flow_command(
    ctx: typer.Context,
    path: Annotated[Path, typer.Argument(help="Path document {grid, symbols, delta?}", show_default=False)],
    delta: Annotated[float | None, typer.Option("--delta", help="Weight of the crossing cylinder")] = None,
    annulus: Annotated[
        str | None, typer.Option("--annulus", help="Only write curves entering r_min < |z| < r_max ('r_min,r_max')")
    ] = None,
    csv_out: Annotated[
        Path | None, typer.Option("--csv-out", help="Prefix for <prefix>.curves.csv and <prefix>.events.csv")
    ] = None,
    as_json: JsonOption = False,
) -> None:
    """Print the spectral flow of a symbol path and the indices at both endpoints."""
    config = RunConfig(command="ep flow", inputs=(path,), output=csv_out, tolerance=tolerance_of(ctx))
    with handled_errors():
        window = _parse_annulus(annulus)
        symbol_path = load_path(config.inputs[0], config.tolerance, delta=delta)
        result = spectral_flow(symbol_path, config.tolerance, annulus=window)
        start = index(EndPeriodicOperator(symbol=symbol_path.symbols[0], delta=symbol_path.delta), config.tolerance)
        end = index(EndPeriodicOperator(symbol=symbol_path.symbols[-1], delta=symbol_path.delta), config.tolerance)
    if config.output is not None:
        write_curves_csv(result.curves, config.output.with_suffix(".curves.csv"))
        write_events_csv(result.events, config.output.with_suffix(".events.csv"))
    if as_json:
        emit_json(
            {
                "sf": result.sf,
                "index_start": start,
                "index_end": end,
                "events": [event.model_dump(mode="json") for event in result.events],
            }
        )
        return
    typer.echo(f"SF = {result.sf:+d}")
    typer.echo(f"index(0) = {start}, index(1) = {end}")
    if result.events:
        render_events(result.events)


@ep_app.command("sweep")
def sweep_command(
    seed: Annotated[int | None, typer.Option("--seed", help="Seed of the random symbols (required)")] = None,
    count: Annotated[int, typer.Option("--count", min=1, help="Number of random symbols")] = 20,
    delta: Annotated[float, typer.Option("--delta", help="Inner weight")] = -0.5,
    delta2: Annotated[float, typer.Option("--delta2", help="Outer weight")] = 0.5,
    block_size: Annotated[int, typer.Option("--block-size", min=1, max=3, help="Block size n")] = 1,
    band: Annotated[int, typer.Option("--band", min=1, max=2, help="Powers -band..band")] = 1,
    guard: Annotated[
        float | None,
        typer.Option("--guard", min=0.0, help="Log-distance between sampled zeros and the weight circles"),
    ] = None,
    threads: Annotated[int, typer.Option("--threads", min=1, envvar=THREADS_ENVVAR, help="Worker processes")] = 1,
    as_json: JsonOption = False,
) -> None:
    """Check index(delta) - index(delta2) against index_change and against truncations on random symbols."""
    try:
        config = RunConfig(command="ep sweep", threads=threads, seed=seed)
    except ValidationError as exc:
        typer.echo(f"error: {exc.errors()[0]['ctx']['error']}", err=True)
        raise typer.Exit(code=ExitCode.BAD_INPUT) from exc
    with handled_errors():
        if delta >= delta2:
            raise InvalidInputError(reason=f"ep sweep needs --delta < --delta2, got {delta} >= {delta2}")
        result = index_change_sweep(
            config.required_seed,
            count,
            delta=delta,
            delta2=delta2,
            block_size=block_size,
            band=band,
            guard=guard,
            threads=config.threads,
        )
    if as_json:
        emit_json(result.model_dump(mode="json"))
    else:
        for check in result.checks:
            if not check.passed:
                difference = _difference(check.index_delta, check.index_delta2)
                line = f"instance {check.instance}: index difference {difference}, index_change {check.index_change}"
                line += f", truncation {check.truncation_difference}"
                if check.error:
                    line += f" ({check.error})"
                console.print(line, markup=False)
        typer.echo(f"{result.passed_count}/{len(result.checks)} pass (seed {config.required_seed})")
    if not result.all_passed:
        raise typer.Exit(code=ExitCode.CHECK_FAILED)


def _difference(first: int | None, second: int | None) -> str:
    return "n/a" if first is None or second is None else str(first - second)

