"""Tests for the perispec exception hierarchy."""

import pytest

from hother.perispec.core.exceptions import (
    BoundaryProximityError,
    DegenerateSeifertError,
    IntegralityError,
    InvalidInputError,
    NonCoprimeError,
    NotFredholmError,
    PerispecError,
    PoleOrderError,
    SingularPencilError,
    TangentialCrossingError,
    TruncationNotStabilizedError,
    WindingResolutionError,
)


class TestPerispecError:
    """Tests for the base exception class."""

    def test_is_exception_subclass(self) -> None:
        """The base class is a plain Exception subclass."""
        assert issubclass(PerispecError, Exception)

    @pytest.mark.parametrize(
        "subclass",
        [
            BoundaryProximityError,
            DegenerateSeifertError,
            IntegralityError,
            InvalidInputError,
            NonCoprimeError,
            NotFredholmError,
            PoleOrderError,
            SingularPencilError,
            TangentialCrossingError,
            TruncationNotStabilizedError,
            WindingResolutionError,
        ],
    )
    def test_subclasses_share_base(self, subclass: type[PerispecError]) -> None:
        """Every concrete exception derives from PerispecError."""
        assert issubclass(subclass, PerispecError)


class TestAttributes:
    """Exceptions store their data and render it into the message."""

    def test_invalid_input(self) -> None:
        """The reason is stored and rendered."""
        error = InvalidInputError(reason="matrix is not square")

        assert error.reason == "matrix is not square"
        assert str(error) == "Invalid input: matrix is not square"

    def test_pole_order(self) -> None:
        """Requested and detected orders are stored."""
        error = PoleOrderError(requested=3, detected=2)

        assert (error.requested, error.detected) == (3, 2)
        assert "3" in str(error)
        assert "2" in str(error)

    def test_non_coprime(self) -> None:
        """Both integers are stored and rendered."""
        error = NonCoprimeError(first=2, second=4)

        assert (error.first, error.second) == (2, 4)
        assert "2 and 4 are not coprime" in str(error)

    def test_degenerate_seifert(self) -> None:
        """Multiplicities are kept as given."""
        error = DegenerateSeifertError(multiplicities=(1, 2, 3))

        assert error.multiplicities == (1, 2, 3)
        assert "(1, 2, 3)" in str(error)

    def test_not_fredholm(self) -> None:
        """Zero and weight are stored."""
        error = NotFredholmError(zero=1 + 0j, delta=0.0)

        assert error.zero == 1 + 0j
        assert error.delta == 0.0
        assert "not Fredholm" in str(error)

    def test_integrality(self) -> None:
        """Quantity and exact value are stored as strings."""
        error = IntegralityError(quantity="casson", value="1/2")

        assert error.quantity == "casson"
        assert "casson = 1/2" in str(error)

    def test_catchable_as_base(self) -> None:
        """Any subclass can be caught via the base class."""
        with pytest.raises(PerispecError):
            raise WindingResolutionError(max_nodes=4096)
