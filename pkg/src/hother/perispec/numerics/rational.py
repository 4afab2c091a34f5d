"""Exact rationals: the JSON form and integrality checks.

Arithmetic itself is :class:`fractions.Fraction`, which is always reduced and
keeps the sign on the numerator.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Annotated, Any

from pydantic import PlainSerializer, PlainValidator

from hother.perispec.core.exceptions import IntegralityError, InvalidInputError

ExactRational = Fraction


def rational_to_json(value: Fraction) -> dict[str, str]:
    """Encode as ``{"num": "<int>", "den": "<int>"}``."""
    return {"num": str(value.numerator), "den": str(value.denominator)}


def rational_from_json(data: Any) -> Fraction:
    """Decode ``{"num": ..., "den": ...}``; plain integers and Fractions pass through.

    Raises:
        InvalidInputError: For anything else or a zero denominator.
    """
    if isinstance(data, Fraction):
        return data
    if isinstance(data, int) and not isinstance(data, bool):
        return Fraction(data)
    if isinstance(data, dict) and {"num", "den"} <= data.keys():
        try:
            return Fraction(int(data["num"]), int(data["den"]))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(reason=f"bad rational {data!r}: {exc}") from exc
    raise InvalidInputError(reason=f"expected {{'num': ..., 'den': ...}}, got {data!r}")


def as_integer(value: Fraction, *, quantity: str) -> int:
    """Return ``value`` as an int.

    Raises:
        IntegralityError: If ``value`` has a denominator other than 1.
    """
    if value.denominator != 1:
        raise IntegralityError(quantity=quantity, value=str(value))
    return value.numerator


def sum_by_common_denominator(values: list[Fraction]) -> Fraction:
    """Add rationals over the lcm of their denominators in one integer pass.

    A second path to the same sum as repeated ``+``; the two agree exactly.
    """
    denominator = lcm(*(value.denominator for value in values)) if values else 1
    numerator = sum(value.numerator * (denominator // value.denominator) for value in values)
    return Fraction(numerator, denominator)


# Rationals inside pydantic models serialize as {"num": str, "den": str}
JsonRational = Annotated[
    Fraction,
    PlainValidator(rational_from_json),
    PlainSerializer(rational_to_json, return_type=dict[str, str]),
]
