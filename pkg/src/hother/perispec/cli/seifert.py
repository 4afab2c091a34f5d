"""``perispec seifert``: exact invariants of Seifert homology spheres."""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Annotated

import typer

from hother.perispec.cli.config import THREADS_ENVVAR, ExitCode, RunConfig, handled_errors
from hother.perispec.cli.output import emit_json, render_barmu_report, render_invariant_report
from hother.perispec.seifert.data import SeifertData
from hother.perispec.seifert.invariants import invariant_report
from hother.perispec.seifert.sweep import SeifertRange, check_barmu, invariant_sweep, write_sweep_csv

seifert_app = typer.Typer(name="seifert", help="Seifert fibered homology spheres.", no_args_is_help=True)

MaxProductOption = Annotated[int, typer.Option("--max-product", min=0, help="Bound on a_1 a_2 a_3")]
ExtraOption = Annotated[
    list[str] | None,
    typer.Option("--extra", help="Additional instance as comma-separated multiplicities, e.g. 2,3,5,7"),
]
ThreadsOption = Annotated[int, typer.Option("--threads", min=1, envvar=THREADS_ENVVAR, help="Worker processes")]


def _parse_extra(values: list[str] | None) -> tuple[tuple[int, ...], ...]:
    parsed: list[tuple[int, ...]] = []
    for value in values or []:
        try:
            parsed.append(tuple(int(part) for part in value.split(",")))
        except ValueError as exc:
            typer.echo(f"error: --extra expects comma-separated integers, got {value!r}", err=True)
            raise typer.Exit(code=ExitCode.BAD_INPUT) from exc
    return tuple(parsed)


def _range(max_product: int, extra: list[str] | None) -> SeifertRange:
    return SeifertRange(max_product=max_product, extra=_parse_extra(extra))


@seifert_app.command("report")
def report_command(
    multiplicities: Annotated[list[int], typer.Argument(help="Fiber multiplicities a_1 ... a_n", show_default=False)],
    as_json: Annotated[bool, typer.Option("--json", help="Full InvariantReport as JSON")] = False,
) -> None:
    """Every invariant of Sigma(a_1, ..., a_n)."""
    with handled_errors():
        report = invariant_report(SeifertData(multiplicities=tuple(multiplicities)))
    if as_json:
        emit_json(report.model_dump(mode="json"))
    else:
        render_invariant_report(report)


@seifert_app.command("sweep")
def sweep_command(
    max_product: MaxProductOption = 2000,
    extra: ExtraOption = None,
    output: Annotated[Path | None, typer.Option("--output", "-o", help="CSV file; stdout when omitted")] = None,
    threads: ThreadsOption = 1,
) -> None:
    """Write the invariant table of every sphere in the range as CSV."""
    config = RunConfig(command="seifert sweep", output=output, threads=threads)
    with handled_errors():
        reports = invariant_sweep(_range(max_product, extra), threads=config.threads)
    if config.output is None:
        write_sweep_csv(reports, sys.stdout)
        return
    with config.output.open("w", newline="", encoding="utf-8") as handle:
        write_sweep_csv(reports, handle)


@seifert_app.command("check-barmu")
def check_barmu_command(
    max_product: MaxProductOption = 2000,
    extra: ExtraOption = None,
    threads: ThreadsOption = 1,
    as_json: Annotated[bool, typer.Option("--json", help="Machine-readable report")] = False,
) -> None:
    """Check eta_dir/2 + eta_sign/8 = -mu_bar on every sphere in the range; exit 1 on any failure."""
    config = RunConfig(command="seifert check-barmu", threads=threads)
    with handled_errors():
        report = check_barmu(_range(max_product, extra), threads=config.threads)
    if as_json:
        emit_json(report.model_dump(mode="json"))
    else:
        render_barmu_report(report)
    if not report.all_passed:
        raise typer.Exit(code=ExitCode.CHECK_FAILED)
