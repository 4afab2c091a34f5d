"""Dedekind sums."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from hother.perispec.core.exceptions import InvalidInputError, NonCoprimeError


def dedekind_sum(b: int, a: int) -> Fraction:
    """Compute ``s(b, a) = sum_{k=1}^{a-1} ((k/a)) ((k b / a))`` exactly.

    ``((x))`` is the sawtooth ``x - floor(x) - 1/2`` for non-integers and 0 at
    integers. With ``r = k b mod a`` each term is ``(2k - a)(2r - a) / (4 a^2)``,
    so the whole sum is accumulated in integers.

    Args:
        b: Any integer coprime to ``a``.
        a: Modulus, ``>= 1``.

    Raises:
        InvalidInputError: If ``a < 1``.
        NonCoprimeError: If ``gcd(a, b) != 1``.

    Example:
        >>> dedekind_sum(1, 3)
        Fraction(1, 18)
    """
    if a < 1:
        raise InvalidInputError(reason=f"Dedekind sum modulus must be >= 1, got {a}")
    if gcd(a, b) != 1:
        raise NonCoprimeError(first=b, second=a)
    total = 0
    for k in range(1, a):
        r = (k * b) % a
        total += (2 * k - a) * (2 * r - a)
    return Fraction(total, 4 * a * a)


def reciprocity_defect(b: int, a: int) -> Fraction:
    """``s(b, a) + s(a, b) - (-1/4 + (a/b + b/a + 1/(a b)) / 12)``; zero for coprime positive pairs."""
    expected = Fraction(-1, 4) + (Fraction(a, b) + Fraction(b, a) + Fraction(1, a * b)) / 12
    return dedekind_sum(b, a) + dedekind_sum(a, b) - expected
