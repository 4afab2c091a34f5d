"""Reading JSON and YAML input documents; writing versioned CSV tables."""

from __future__ import annotations

import csv
import json
from typing import TYPE_CHECKING, Any, TextIO, cast

import yaml

from hother.perispec.core.exceptions import InvalidInputError

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence
    from pathlib import Path

YAML_SUFFIXES = frozenset({".yaml", ".yml"})


def load_document(path: Path) -> Any:
    """Read a JSON document, or a YAML one when the suffix says so.

    Args:
        path: File to read.

    Returns:
        The decoded document.

    Raises:
        FileNotFoundError: If ``path`` does not exist.
        InvalidInputError: If the file cannot be decoded.
    """
    text = path.read_text(encoding="utf-8")
    try:
        if path.suffix.lower() in YAML_SUFFIXES:
            return yaml.safe_load(text)
        return json.loads(text)
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise InvalidInputError(reason=f"{path.name} could not be decoded: {exc}") from exc


def require_mapping(document: Any, *, what: str) -> dict[str, Any]:
    """Check that a decoded document is a JSON object.

    Args:
        document: Decoded document.
        what: Name of the expected object, for the error message.

    Raises:
        InvalidInputError: If it is not a mapping with string keys.
    """
    if not isinstance(document, dict):
        raise InvalidInputError(reason=f"{what} must be a JSON object, got {type(document).__name__}")
    mapping = cast("dict[Any, Any]", document)
    return {str(key): value for key, value in mapping.items()}


def write_csv_table(handle: TextIO, table: str, header: Sequence[str], rows: Iterable[Sequence[object]]) -> None:
    """Write a versioned CSV table: a ``# perispec <table> v1`` line, the header, then the rows."""
    handle.write(f"# perispec {table} v1\n")
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
