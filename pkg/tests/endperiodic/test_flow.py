"""Tests for spectral curve tracking and spectral flow."""

import math

import numpy as np
import pytest

from hother.perispec.core.exceptions import InvalidInputError, IrregularEndpointError
from hother.perispec.endperiodic import (
    EndPeriodicOperator,
    LaurentSymbol,
    SymbolPath,
    index,
    spectral_flow,
    track_spectral_curves,
)
from hother.perispec.endperiodic.sampling import random_path


@pytest.fixture
def two_crossing_path() -> SymbolPath:
    """diag(z - 0.5, z + 0.4) to diag(z - 1.5, z + 1.4): crossings at t = 0.5 and t = 0.6."""
    start = LaurentSymbol.from_blocks({0: np.diag([-0.5, 0.4]), 1: np.eye(2)})
    end = LaurentSymbol.from_blocks({0: np.diag([-1.5, 1.4]), 1: np.eye(2)})
    return SymbolPath.linear(start, end)


def _endpoint_difference(path: SymbolPath) -> int:
    start = index(EndPeriodicOperator(symbol=path.symbols[0], delta=path.delta))
    end = index(EndPeriodicOperator(symbol=path.symbols[-1], delta=path.delta))
    return end - start


class TestSymbolPath:
    """Tests for SymbolPath."""

    def test_symbol_at_interpolates(self, outward_path: SymbolPath) -> None:
        """At t = 0.5 the symbol is z - 1."""
        assert outward_path.symbol_at(0.5).nonzero_zeros()[0][0] == pytest.approx(1.0)
        assert outward_path.symbol_at(0.0) is outward_path.symbols[0]
        assert outward_path.symbol_at(1.0) is outward_path.symbols[-1]

    def test_parameter_range(self, outward_path: SymbolPath) -> None:
        """t must lie in [0, 1]."""
        with pytest.raises(InvalidInputError):
            outward_path.symbol_at(1.5)

    def test_irregular_endpoint(self, inner_symbol: LaurentSymbol) -> None:
        """An endpoint with a zero on the cylinder is rejected."""
        on_circle = LaurentSymbol.from_blocks({0: [[-1.0]], 1: [[1.0]]})

        with pytest.raises(IrregularEndpointError) as exc_info:
            SymbolPath.linear(inner_symbol, on_circle)

        assert exc_info.value.endpoint == 1.0

    @pytest.mark.parametrize("grid", [(0.0, 0.5), (0.0, 0.6, 0.4, 1.0), (0.1, 1.0)])
    def test_bad_grid(self, inner_symbol: LaurentSymbol, grid: tuple[float, ...]) -> None:
        """The grid must run strictly from 0 to 1 with one symbol per node."""
        with pytest.raises(InvalidInputError):
            SymbolPath(grid=grid, symbols=(inner_symbol,) * len(grid))

    def test_reversed(self, inner_symbol: LaurentSymbol, outer_symbol: LaurentSymbol) -> None:
        """Reversal mirrors the grid and the symbol order."""
        path = SymbolPath(grid=(0.0, 0.25, 1.0), symbols=(inner_symbol, outer_symbol, outer_symbol))

        backwards = path.reversed()

        assert backwards.grid == (0.0, 0.75, 1.0)
        assert backwards.symbols[0] is outer_symbol


class TestTracking:
    """Tests for track_spectral_curves()."""

    def test_single_curve(self, outward_path: SymbolPath) -> None:
        """The zero of z - 0.5 - t is followed from 0.5 to 1.5."""
        (curve,) = track_spectral_curves(outward_path)

        assert curve.ts[0] == 0.0
        assert curve.ts[-1] == 1.0
        assert curve.zs[0] == pytest.approx(0.5)
        assert curve.zs[-1] == pytest.approx(1.5)
        assert np.all(np.diff(curve.ts) > 0)

    def test_annulus_filter(self, two_crossing_path: SymbolPath) -> None:
        """Only curves entering the annulus are kept."""
        curves = track_spectral_curves(two_crossing_path, annulus=(1.45, 1.6))

        assert len(curves) == 1
        assert curves[0].zs[-1] == pytest.approx(1.5)


class TestSpectralFlow:
    """Tests for spectral_flow()."""

    def test_outward_crossing(self, outward_path: SymbolPath) -> None:
        """One zero leaving the unit disk gives SF = +1 at t = 0.5."""
        result = spectral_flow(outward_path)

        assert result.sf == 1
        (event,) = result.events
        assert event.sign == 1
        assert event.t_star == pytest.approx(0.5, abs=1e-8)
        assert abs(event.z_star) == pytest.approx(1.0, abs=1e-8)
        assert event.rate == pytest.approx(1.0, rel=1e-4)
        assert event.d == 1

    def test_flow_equals_index_difference(self, outward_path: SymbolPath) -> None:
        """SF = index(1) - index(0)."""
        assert spectral_flow(outward_path).sf == _endpoint_difference(outward_path) == 1

    def test_reversal_negates(self, outward_path: SymbolPath) -> None:
        """Running the path backwards flips every sign."""
        result = spectral_flow(outward_path.reversed())

        assert result.sf == -1
        assert [event.sign for event in result.events] == [-1]

    def test_two_crossings_ordered(self, two_crossing_path: SymbolPath) -> None:
        """Events come in t order and add up to the index difference."""
        result = spectral_flow(two_crossing_path)

        assert [event.t_star for event in result.events] == [pytest.approx(0.5, abs=1e-8), pytest.approx(0.6, abs=1e-8)]
        assert result.sf == _endpoint_difference(two_crossing_path) == 2

    def test_weight_moves_cylinder(self, inner_symbol: LaurentSymbol, outer_symbol: LaurentSymbol) -> None:
        """With |z| = 2 as the cylinder nothing crosses."""
        path = SymbolPath.linear(inner_symbol, outer_symbol, delta=math.log(2.0))

        result = spectral_flow(path)

        assert result.sf == 0
        assert result.events == ()

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(50))
    def test_random_paths(self, seed: int) -> None:
        """On random paths SF equals the endpoint index difference and reversal negates it."""
        rng = np.random.default_rng(seed)
        path = random_path(rng, block_size=1 + (seed // 2) % 2, degree=2, nodes=3, guard=0.3, monic=seed % 2 == 0)

        sf = spectral_flow(path).sf

        assert sf == _endpoint_difference(path)
        assert spectral_flow(path.reversed()).sf == -sf


class TestEscapingZeros:
    """Zeros running off to infinity or through the origin away from the cylinder."""

    @pytest.fixture
    def through_origin_path(self) -> SymbolPath:
        """z - 0.5 to the constant 2: the zero (0.5 - 2.5t) / (1 - t) passes 0, crosses -1, then leaves for infinity."""
        start = LaurentSymbol.from_blocks({0: [[-0.5]], 1: [[1.0]]})
        end = LaurentSymbol.from_blocks({0: [[2.0]]})
        return SymbolPath.linear(start, end)

    @pytest.fixture
    def vanishing_leading_path(self) -> SymbolPath:
        """Leading coefficient 1, 0, -1 at t = 0, 0.5, 1: out through z = 1, back in through z = -1."""
        symbols = (
            LaurentSymbol.from_blocks({0: [[-0.5]], 1: [[1.0]]}),
            LaurentSymbol.from_blocks({0: [[-0.5]], 1: [[0.0]]}),
            LaurentSymbol.from_blocks({0: [[0.5]], 1: [[-1.0]]}),
        )
        return SymbolPath(grid=(0.0, 0.5, 1.0), symbols=symbols)

    def test_zero_leaving_to_infinity(self, through_origin_path: SymbolPath) -> None:
        """One transversal crossing at t = 3/7 and SF equal to the index difference."""
        result = spectral_flow(through_origin_path)

        assert result.sf == _endpoint_difference(through_origin_path) == 1
        (event,) = result.events
        assert event.sign == 1
        assert event.t_star == pytest.approx(3 / 7, abs=1e-8)
        assert event.z_star == pytest.approx(-1.0, abs=1e-6)

    def test_curves_stay_near_cylinder(self, through_origin_path: SymbolPath) -> None:
        """Tracked samples never leave the band around the cylinder."""
        curves = track_spectral_curves(through_origin_path)

        assert curves
        for curve in curves:
            assert np.all(np.abs(curve.log_modulus()) <= 1.0 + 1e-12)

    def test_leading_coefficient_through_zero(self, vanishing_leading_path: SymbolPath) -> None:
        """Out at t = 1/4, in at t = 5/8: SF = 0 = index difference."""
        result = spectral_flow(vanishing_leading_path)

        assert result.sf == _endpoint_difference(vanishing_leading_path) == 0
        assert [event.sign for event in result.events] == [1, -1]
        assert [event.t_star for event in result.events] == [
            pytest.approx(0.25, abs=1e-8),
            pytest.approx(0.625, abs=1e-8),
        ]
        assert [event.z_star for event in result.events] == [
            pytest.approx(1.0, abs=1e-6),
            pytest.approx(-1.0, abs=1e-6),
        ]

    def test_reversal_of_escaping_path(self, vanishing_leading_path: SymbolPath) -> None:
        """Backwards, the two crossings swap signs."""
        result = spectral_flow(vanishing_leading_path.reversed())

        assert result.sf == 0
        assert [event.sign for event in result.events] == [1, -1]
