"""Console rendering and machine-readable output.

Tables go through rich; ``--json`` output is plain text with sorted keys and a
two-space indent so identical inputs give byte-identical stdout.
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING, Any

import typer
from rich import box
from rich.console import Console
from rich.table import Table

if TYPE_CHECKING:
    from collections.abc import Sequence

    from hother.perispec.endperiodic.flow import CrossingEvent
    from hother.perispec.family.models import SpectralPoint
    from hother.perispec.seifert.invariants import InvariantReport
    from hother.perispec.seifert.sweep import BarmuReport

console = Console(highlight=False)


def format_complex(z: complex) -> str:
    """``a+bj`` with ten significant digits per part."""
    return f"{z.real:.10g}{z.imag:+.10g}j"


def emit_json(data: Any) -> None:
    """Write ``data`` as sorted, indented JSON to stdout."""
    typer.echo(json.dumps(data, sort_keys=True, indent=2))


def _table(title: str, *columns: str) -> Table:
    table = Table(title=title, box=box.ROUNDED, border_style="cyan")
    for column in columns:
        table.add_column(column, justify="right")
    return table


def render_spectral_points(points: Sequence[SpectralPoint]) -> None:
    """One row per spectral point."""
    table = _table("Spectral set", "mu", "det-mult", "ker-dim", "d", "rank P")
    for point in points:
        table.add_row(
            format_complex(point.mu),
            str(point.det_multiplicity),
            str(point.kernel_dim),
            str(point.d_value),
            str(point.proj_rank),
        )
    console.print(table)


def render_zeros(zeros: Sequence[tuple[complex, int, int]]) -> None:
    """Zeros of a symbol with their determinant multiplicity and d-value."""
    table = _table("Zeros between the weight circles", "z", "|z|", "det-mult", "d")
    for z, multiplicity, d in zeros:
        table.add_row(format_complex(z), f"{abs(z):.10g}", str(multiplicity), str(d))
    console.print(table)


def render_events(events: Sequence[CrossingEvent]) -> None:
    """Crossing events in canonical order."""
    table = _table("Crossings", "t*", "z*", "sign")
    for event in events:
        table.add_row(f"{event.t_star:.10g}", format_complex(event.z_star), f"{event.sign:+d}")
    console.print(table)


def render_invariant_report(report: InvariantReport) -> None:
    """Key/value listing of every invariant."""
    label = "Sigma(" + ",".join(str(a) for a in report.multiplicities) + ")"
    table = Table(title=label, box=box.ROUNDED, border_style="cyan", show_header=False)
    table.add_column("invariant", style="bold")
    table.add_column("value", justify="right")
    rows = (
        ("chi", str(report.chi)),
        ("euler number", str(report.euler_number)),
        ("vortex count", str(report.vortex_count)),
        ("moduli count", str(report.moduli_count)),
        ("geometric genus", str(report.geometric_genus)),
        ("K^2 + s", str(report.canonical_square)),
        ("eta_dir", str(report.etas.eta_dir)),
        ("eta_sign", str(report.etas.eta_sign)),
        ("eta_dir/2 + eta_sign/8", str(report.etas.combo)),
        ("w", str(report.w)),
        ("casson", str(report.casson)),
        ("mu_bar", str(report.mu_bar)),
        ("lambda_SW product", str(report.lambda_sw_product)),
        ("lambda_SW circle action", str(report.lambda_sw_circle_action)),
        ("lambda_SW conjugation", str(report.lambda_sw_conjugation)),
        ("Rohlin parity", "ok" if report.rohlin_parity_ok else "VIOLATED"),
    )
    for name, value in rows:
        table.add_row(name, value)
    console.print(table)


def render_barmu_report(report: BarmuReport) -> None:
    """Summary line, then every failure with its dump."""
    if report.all_passed:
        console.print(f"all pass ({report.passed_count}/{report.total})")
        return
    console.print(f"[bold red]{report.total - report.passed_count} of {report.total} instances fail[/]")
    for verdict in report.failures:
        console.print(f"{verdict.multiplicities}: combo {verdict.combo} != -mu_bar {verdict.negated_mu_bar}")
        if verdict.report is not None:
            render_invariant_report(verdict.report)
        elif verdict.error is not None:
            console.print(f"  dump unavailable: {verdict.error}")
