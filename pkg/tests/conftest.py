"""Shared pytest fixtures for perispec tests."""

import json
import time
from collections.abc import Callable, Generator
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import numpy as np
import pytest

from hother.perispec.endperiodic import LaurentSymbol, SymbolPath
from hother.perispec.family import AffineFamily

# =============================================================================
# Timing Utilities
# =============================================================================


@contextmanager
def assert_completes_within(seconds: float) -> Generator[None]:
    """Context manager to assert that code completes within a time limit.

    Args:
        seconds: Maximum allowed execution time

    Raises:
        AssertionError: If execution takes longer than specified
    """
    start = time.monotonic()
    yield
    elapsed = time.monotonic() - start
    assert elapsed < seconds, f"Took {elapsed:.2f}s, expected < {seconds}s"


# =============================================================================
# Family Fixtures
# =============================================================================


@pytest.fixture
def diag_family() -> AffineFamily:
    """T = diag(1, -1), A = I: simple spectral points at -1 and 1."""
    return AffineFamily.from_arrays(np.diag([1.0, -1.0]), np.eye(2))


@pytest.fixture
def nilpotent_family() -> AffineFamily:
    """T a 2x2 Jordan block at 0, A = I: one double point with a chain of length 2."""
    return AffineFamily.from_arrays([[0.0, 1.0], [0.0, 0.0]], np.eye(2))


@pytest.fixture
def nilpotent3_family() -> AffineFamily:
    """T a 3x3 Jordan block at 0, A = I."""
    return AffineFamily.from_arrays(np.diag([1.0, 1.0], k=1), np.eye(3))


# =============================================================================
# Symbol Fixtures
# =============================================================================


@pytest.fixture
def inner_symbol() -> LaurentSymbol:
    """D(z) = z - 0.5, zero inside the unit circle."""
    return LaurentSymbol.from_blocks({0: [[-0.5]], 1: [[1.0]]})


@pytest.fixture
def outer_symbol() -> LaurentSymbol:
    """D(z) = z - 1.5, zero outside the unit circle."""
    return LaurentSymbol.from_blocks({0: [[-1.5]], 1: [[1.0]]})


@pytest.fixture
def outward_path(inner_symbol: LaurentSymbol, outer_symbol: LaurentSymbol) -> SymbolPath:
    """The zero moves from 0.5 to 1.5, crossing the unit circle once outward."""
    return SymbolPath.linear(inner_symbol, outer_symbol)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for randomized tests."""
    return np.random.default_rng(20240917)


# =============================================================================
# Document Fixtures
# =============================================================================


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, Any], Path]:
    """Write a JSON document under tmp_path and return its path."""

    def _write(name: str, data: Any) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return _write


def real_matrix(rows: list[list[float]]) -> list[list[list[float]]]:
    """Encode a real matrix as rows of [re, im] pairs."""
    return [[[value, 0.0] for value in row] for row in rows]


@pytest.fixture
def inner_symbol_document() -> dict[str, Any]:
    """JSON form of z - 0.5."""
    return {"n": 1, "k_min": 0, "k_max": 1, "blocks": {"0": real_matrix([[-0.5]]), "1": real_matrix([[1.0]])}}


@pytest.fixture
def outer_symbol_document() -> dict[str, Any]:
    """JSON form of z - 1.5."""
    return {"n": 1, "k_min": 0, "k_max": 1, "blocks": {"0": real_matrix([[-1.5]]), "1": real_matrix([[1.0]])}}


@pytest.fixture
def diag_family_document() -> dict[str, Any]:
    """JSON form of T = diag(1, -1), A = I."""
    return {"n": 2, "T": real_matrix([[1.0, 0.0], [0.0, -1.0]]), "A": real_matrix([[1.0, 0.0], [0.0, 1.0]])}
