"""Seifert fibered homology spheres and their normalized invariants."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, prod

from hother.perispec.core.exceptions import (
    DegenerateSeifertError,
    InvalidInputError,
    NonCoprimeError,
    SeifertNormalizationError,
)

MIN_FIBERS = 3


@dataclass(frozen=True, slots=True)
class NormalizedInvariants:
    """Unnormalized Seifert invariants ``(b; (a_1, w_1), ..., (a_n, w_n))``.

    They satisfy ``0 < w_k < a_k`` and ``b - sum w_k / a_k = 1 / (a_1 ... a_n)``,
    so the Euler number is ``-1 / (a_1 ... a_n)``.

    Attributes:
        b: Central integer; the plumbing's central weight is ``-b``.
        pairs: ``(a_k, w_k)`` per exceptional fiber.
    """

    b: int
    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SeifertData:
    """Multiplicities of the exceptional fibers of ``Sigma(a_1, ..., a_n)``.

    Multiplicities equal to 1 are dropped (they do not change the manifold).
    The remaining ones must be pairwise coprime. Fewer than three remaining
    fibers describe ``S^3`` or a lens space; such data can be built, but only
    :func:`~hother.perispec.seifert.invariants.euler_orbifold` accepts it.

    Attributes:
        multiplicities: The exceptional multiplicities, sorted ascending.
        given: The multiplicities as passed in.

    Raises:
        InvalidInputError: If a multiplicity is below 1.
        NonCoprimeError: If two multiplicities share a factor.

    Example:
        >>> SeifertData.of(5, 1, 3, 2).multiplicities
        (2, 3, 5)
    """

    multiplicities: tuple[int, ...]
    given: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        given = self.given or tuple(self.multiplicities)
        for a in given:
            if a < 1:
                raise InvalidInputError(reason=f"multiplicities must be >= 1, got {a}")
        fibers = tuple(sorted(a for a in given if a > 1))
        for i, a in enumerate(fibers):
            for other in fibers[i + 1 :]:
                if gcd(a, other) != 1:
                    raise NonCoprimeError(first=a, second=other)
        object.__setattr__(self, "given", given)
        object.__setattr__(self, "multiplicities", fibers)

    @classmethod
    def of(cls, *multiplicities: int) -> SeifertData:
        """Build from positional multiplicities."""
        return cls(multiplicities=multiplicities)

    @property
    def fiber_count(self) -> int:
        """Number of exceptional fibers."""
        return len(self.multiplicities)

    @property
    def product(self) -> int:
        """``a_1 * ... * a_n``."""
        return prod(self.multiplicities)

    @property
    def is_degenerate(self) -> bool:
        """Fewer than three exceptional fibers."""
        return self.fiber_count < MIN_FIBERS

    def require_genuine(self) -> SeifertData:
        """Return ``self``, or raise for degenerate data.

        Raises:
            DegenerateSeifertError: If fewer than three exceptional fibers remain.
        """
        if self.is_degenerate:
            raise DegenerateSeifertError(multiplicities=self.given)
        return self

    @cached_property
    def _normalized(self) -> NormalizedInvariants:
        product = self.product
        pairs: list[tuple[int, int]] = []
        for a in self.multiplicities:
            cofactor = product // a
            pairs.append((a, (-pow(cofactor, -1, a)) % a))
        numerator = 1 + sum(w * (product // a) for a, w in pairs)
        if numerator % product:
            raise SeifertNormalizationError(multiplicities=self.multiplicities)
        return NormalizedInvariants(b=numerator // product, pairs=tuple(pairs))

    def normalized(self) -> NormalizedInvariants:
        """Normalized invariants with Euler number ``-1 / product``.

        ``w_k`` is the residue of ``-(product / a_k)^{-1}`` modulo ``a_k``.

        Raises:
            DegenerateSeifertError: For degenerate data.
            SeifertNormalizationError: If no integral ``b`` exists.

        Example:
            >>> SeifertData.of(2, 3, 5).normalized()
            NormalizedInvariants(b=2, pairs=((2, 1), (3, 2), (5, 4)))
        """
        self.require_genuine()
        return self._normalized

    def label(self) -> str:
        """``"Sigma(a_1,...,a_n)"``."""
        return "Sigma(" + ",".join(str(a) for a in self.multiplicities) + ")"
