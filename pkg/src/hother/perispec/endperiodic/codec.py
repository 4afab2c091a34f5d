"""JSON formats for symbols, paths and caps; CSV tables for flow output.

Symbol: ``{"n": int, "k_min": int, "k_max": int, "blocks": {"<k>": matrix}}``.
Path: ``{"grid": [t, ...], "symbols": [symbol, ...], "delta": float?}``.
Cap: ``[{"row": int, "col": int, "block": matrix}, ...]``.
Matrices are nested rows of ``[re, im]`` pairs.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any, cast

from hother.perispec.core.documents import load_document, require_mapping, write_csv_table
from hother.perispec.core.exceptions import InvalidInputError
from hother.perispec.endperiodic.flow import SymbolPath
from hother.perispec.endperiodic.operator import CapEntry
from hother.perispec.endperiodic.symbol import LaurentSymbol
from hother.perispec.numerics.linalg import matrix_from_json, matrix_to_json
from hother.perispec.numerics.tolerance import DEFAULT_TOLERANCE

if TYPE_CHECKING:
    from collections.abc import Iterable
    from pathlib import Path

    from hother.perispec.endperiodic.flow import CrossingEvent, SpectralCurve
    from hother.perispec.numerics.tolerance import ToleranceConfig

CURVES_HEADER = ("curve", "t", "re_z", "im_z", "abs_z")
EVENTS_HEADER = ("t_star", "re_z", "im_z", "sign")


def _require_int(document: dict[str, Any], key: str, *, what: str) -> int:
    value = document.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidInputError(reason=f"{what} needs an integer {key!r}, got {value!r}")
    return value


def symbol_to_json(symbol: LaurentSymbol) -> dict[str, Any]:
    """Encode a symbol."""
    return {
        "n": symbol.block_size,
        "k_min": symbol.k_min,
        "k_max": symbol.k_max,
        "blocks": {str(k): matrix_to_json(block) for k, block in symbol.blocks().items()},
    }


def symbol_from_json(data: Any, tol: ToleranceConfig | None = None) -> LaurentSymbol:
    """Decode a symbol; powers in ``[k_min, k_max]`` without a block are zero.

    Raises:
        InvalidInputError: If the document is malformed.
        SingularPencilError: If ``det D`` vanishes identically.
    """
    document = require_mapping(data, what="symbol")
    n = _require_int(document, "n", what="symbol")
    k_min = _require_int(document, "k_min", what="symbol")
    k_max = _require_int(document, "k_max", what="symbol")
    if n < 1 or not k_min <= 0 <= k_max:
        raise InvalidInputError(reason=f"symbol needs n >= 1 and k_min <= 0 <= k_max, got {n}, [{k_min}, {k_max}]")
    raw_blocks = require_mapping(document.get("blocks"), what="symbol blocks")
    blocks: dict[int, Any] = {}
    for key, value in raw_blocks.items():
        try:
            k = int(key)
        except ValueError as exc:
            raise InvalidInputError(reason=f"symbol block key {key!r} is not an integer") from exc
        if not k_min <= k <= k_max:
            raise InvalidInputError(reason=f"symbol block {k} lies outside [{k_min}, {k_max}]")
        block = matrix_from_json(value, name=f"D_{k}")
        if block.shape != (n, n):
            raise InvalidInputError(reason=f"symbol block D_{k} has shape {block.shape}, expected ({n}, {n})")
        blocks[k] = block
    blocks.setdefault(k_min, [[0.0] * n for _ in range(n)])
    blocks.setdefault(k_max, [[0.0] * n for _ in range(n)])
    return LaurentSymbol.from_blocks(blocks, tol)


def path_to_json(path: SymbolPath) -> dict[str, Any]:
    """Encode a path."""
    return {
        "grid": list(path.grid),
        "symbols": [symbol_to_json(symbol) for symbol in path.symbols],
        "delta": path.delta,
    }


def path_from_json(data: Any, tol: ToleranceConfig | None = None, *, delta: float | None = None) -> SymbolPath:
    """Decode a path; ``delta`` overrides the document's weight (default 0).

    Raises:
        InvalidInputError: If the document is malformed.
        IrregularEndpointError: If an endpoint symbol has a zero on the cylinder.
    """
    document = require_mapping(data, what="path")
    grid = document.get("grid")
    symbols = document.get("symbols")
    if not isinstance(grid, list) or not isinstance(symbols, list):
        raise InvalidInputError(reason="path needs 'grid' and 'symbols' lists")
    grid_values = cast("list[Any]", grid)
    if not all(isinstance(t, int | float) and not isinstance(t, bool) for t in grid_values):
        raise InvalidInputError(reason="path grid must hold numbers")
    weight = delta if delta is not None else document.get("delta", 0.0)
    if not isinstance(weight, int | float) or isinstance(weight, bool):
        raise InvalidInputError(reason=f"path delta must be a number, got {weight!r}")
    decoded = tuple(symbol_from_json(symbol, tol) for symbol in cast("list[Any]", symbols))
    grid_tuple = tuple(float(t) for t in grid_values)
    return SymbolPath(grid=grid_tuple, symbols=decoded, delta=float(weight), tol=tol or DEFAULT_TOLERANCE)


def cap_from_json(data: Any) -> tuple[CapEntry, ...]:
    """Decode a list of cap entries.

    Raises:
        InvalidInputError: If the document is malformed.
    """
    if not isinstance(data, list):
        raise InvalidInputError(reason="cap must be a list of entries")
    entries: list[CapEntry] = []
    for raw in cast("list[Any]", data):
        entry = require_mapping(raw, what="cap entry")
        row = _require_int(entry, "row", what="cap entry")
        col = _require_int(entry, "col", what="cap entry")
        entries.append(CapEntry(row=row, col=col, block=matrix_from_json(entry.get("block"), name="cap block")))
    return tuple(entries)


def load_symbol(path: Path, tol: ToleranceConfig | None = None) -> LaurentSymbol:
    """Read a symbol from a JSON (or YAML) file."""
    return symbol_from_json(load_document(path), tol)


def load_path(path: Path, tol: ToleranceConfig | None = None, *, delta: float | None = None) -> SymbolPath:
    """Read a symbol path from a JSON (or YAML) file."""
    return path_from_json(load_document(path), tol, delta=delta)


def load_cap(path: Path) -> tuple[CapEntry, ...]:
    """Read cap entries from a JSON (or YAML) file."""
    return cap_from_json(load_document(path))


def _write_table(path: Path, table: str, header: tuple[str, ...], rows: Iterable[tuple[object, ...]]) -> None:
    with path.open("w", newline="", encoding="utf-8") as handle:
        write_csv_table(handle, table, header, rows)


def write_curves_csv(curves: Iterable[SpectralCurve], path: Path) -> None:
    """Write spectral-curve samples, one row per (curve, t)."""
    rows = (
        (curve.label, repr(float(t)), repr(float(z.real)), repr(float(z.imag)), repr(float(abs(z))))
        for curve in curves
        for t, z in zip(curve.ts, curve.zs, strict=True)
    )
    _write_table(path, "curves", CURVES_HEADER, rows)


def write_events_csv(events: Iterable[CrossingEvent], path: Path) -> None:
    """Write crossing events in their canonical order."""
    rows = (
        (repr(event.t_star), repr(event.z_star.real), repr(event.z_star.imag), event.sign) for event in events
    )
    _write_table(path, "events", EVENTS_HEADER, rows)
