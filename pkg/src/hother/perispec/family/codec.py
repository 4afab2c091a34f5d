"""JSON form of affine families: ``{"n": int, "T": [[[re, im], ...]], "A": ...}``."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

from hother.perispec.core.documents import load_document, require_mapping
from hother.perispec.core.exceptions import InvalidInputError
from hother.perispec.family.affine import AffineFamily
from hother.perispec.numerics.linalg import matrix_from_json, matrix_to_json

if TYPE_CHECKING:
    from pathlib import Path

    from hother.perispec.numerics.tolerance import ToleranceConfig


def family_to_json(family: AffineFamily) -> dict[str, Any]:
    """Encode a family."""
    return {
        "n": family.dimension,
        "T": matrix_to_json(family.base),
        "A": matrix_to_json(family.slope),
    }


def family_from_json(data: Any, tol: ToleranceConfig | None = None) -> AffineFamily:
    """Decode a family.

    Raises:
        InvalidInputError: If the document is malformed or ``n`` disagrees
            with the matrix shapes.
        SingularPencilError: If ``det(T + mu A)`` vanishes identically.
    """
    document = require_mapping(data, what="family")
    missing = {"n", "T", "A"} - document.keys()
    if missing:
        raise InvalidInputError(reason=f"family is missing {sorted(missing)}")
    n = document["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidInputError(reason=f"family n must be a positive integer, got {n!r}")
    base = matrix_from_json(document["T"], name="T")
    slope = matrix_from_json(document["A"], name="A")
    if base.shape != (n, n) or slope.shape != (n, n):
        raise InvalidInputError(reason=f"family declares n={n} but T is {base.shape} and A is {slope.shape}")
    return AffineFamily.from_arrays(base, slope, tol)


def load_family(path: Path, tol: ToleranceConfig | None = None) -> AffineFamily:
    """Read a family from a JSON (or YAML) file."""
    return family_from_json(load_document(path), tol)
