"""Tests for contour quadrature and winding numbers."""

import numpy as np
import pytest
from pydantic import ValidationError

from hother.perispec.core.exceptions import NonFiniteSampleError, WindingResolutionError
from hother.perispec.numerics.contour import CircleContour, contour_integrate, converged_integrate, winding_number


class TestCircleContour:
    """Tests for CircleContour."""

    def test_nodes_lie_on_circle(self) -> None:
        """Every node sits at the given distance from the center."""
        contour = CircleContour(center=1 + 1j, radius=0.5, node_count=32)

        nodes = contour.nodes()

        assert nodes.shape == (32,)
        np.testing.assert_allclose(np.abs(nodes - (1 + 1j)), 0.5)

    def test_odd_node_count_rejected(self) -> None:
        """Node counts must be even."""
        with pytest.raises(ValidationError):
            CircleContour(radius=1.0, node_count=33)

    def test_non_positive_radius_rejected(self) -> None:
        """The radius must be positive."""
        with pytest.raises(ValidationError):
            CircleContour(radius=0.0)

    def test_distance_to(self) -> None:
        """Distance is measured to the circle, not the center."""
        contour = CircleContour(radius=1.0)

        assert contour.distance_to(0.25) == pytest.approx(0.75)
        assert contour.distance_to(3j) == pytest.approx(2.0)


class TestContourIntegrate:
    """Tests for contour_integrate() and converged_integrate()."""

    def test_reciprocal(self) -> None:
        """The integral of 1/mu around the origin is 1."""
        result = contour_integrate(lambda mu: 1 / mu, CircleContour(radius=1.0))

        assert result.shape == (1, 1)
        assert result[0, 0] == pytest.approx(1.0)

    def test_analytic_integrand_vanishes(self) -> None:
        """Integrands analytic inside the circle integrate to 0."""
        result = contour_integrate(lambda mu: mu**2 + 3, CircleContour(radius=2.0))

        assert abs(result[0, 0]) < 1e-12

    def test_matrix_resolvent_trace(self) -> None:
        """The resolvent of diag(0.5, 3) enclosed by |mu| = 1 picks up one pole."""
        matrix = np.diag([0.5, 3.0]).astype(np.complex128)

        result = converged_integrate(
            lambda mu: np.linalg.inv(mu * np.eye(2) - matrix),
            CircleContour(radius=1.0),
        )

        np.testing.assert_allclose(result, np.diag([1.0, 0.0]), atol=1e-10)

    def test_non_finite_sample(self) -> None:
        """A pole on a node is reported with its node index."""
        with pytest.raises(NonFiniteSampleError) as exc_info:
            contour_integrate(lambda mu: np.inf if mu == 1 else 0.0, CircleContour(radius=1.0, node_count=16))

        assert exc_info.value.node == 0


class TestWindingNumber:
    """Tests for winding_number()."""

    @pytest.mark.parametrize(
        ("power", "expected"),
        [(1, 1), (3, 3), (-2, -2), (0, 0)],
    )
    def test_powers(self, power: int, expected: int) -> None:
        """z^k winds k times around the unit circle."""
        assert winding_number(lambda z: z**power, CircleContour(radius=1.0)) == expected

    def test_zero_outside(self) -> None:
        """A zero outside the circle does not count."""
        assert winding_number(lambda z: z - 2.0, CircleContour(radius=1.0)) == 0

    def test_fast_phase_refines(self) -> None:
        """A high power needs more nodes than the start count and still resolves."""
        assert winding_number(lambda z: z**40, CircleContour(radius=1.0, node_count=16)) == 40

    def test_zero_on_circle(self) -> None:
        """A zero at a node never resolves."""
        with pytest.raises(WindingResolutionError):
            winding_number(lambda z: z - 1.0, CircleContour(radius=1.0, node_count=16), max_nodes=256)
