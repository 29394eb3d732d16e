"""Exact rational parsing, formatting, and small vector helpers.

Every coordinate, weight, and bound in this package is a
``fractions.Fraction``.  Arithmetic is exact and comparisons are decided
without tolerances; floating point never enters a decision.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DimensionMismatch, MalformedNumber, ZeroDenominator

Rational = Fraction


def rational_parse(text: str) -> Fraction:
    """Parse ``"a/b"``, integer, or decimal text into an exact Fraction.

    Decimal strings are expanded exactly ("0.1" becomes 1/10, never the
    nearest binary float).
    """
    if not isinstance(text, str):
        raise MalformedNumber(f"expected a string, got {type(text).__name__}")
    s = text.strip()
    if "/" in s:
        num_text, _, den_text = s.partition("/")
        try:
            num = int(num_text.strip())
            den = int(den_text.strip())
        except ValueError:
            raise MalformedNumber(f"not a rational literal: {text!r}") from None
        if den == 0:
            raise ZeroDenominator(f"zero denominator in {text!r}")
        return Fraction(num, den)
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise MalformedNumber(f"not a rational literal: {text!r}") from None


def rational_format(value: Fraction) -> str:
    """Canonical text form: ``"a"`` for integers, ``"a/b"`` otherwise."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_fraction(value) -> Fraction:
    """Coerce int, Fraction, or string input to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rational_parse(value)
    raise MalformedNumber(
        f"refusing inexact type {type(value).__name__}; use int, str, or Fraction"
    )


def as_point(coords: Iterable) -> tuple[Fraction, ...]:
    """Coerce an iterable of coordinates to an exact tuple."""
    point = tuple(as_fraction(c) for c in coords)
    if not point:
        raise DimensionMismatch("a point needs at least one coordinate")
    return point


def as_matrix(rows: Iterable[Iterable]) -> tuple[tuple[Fraction, ...], ...]:
    """Coerce rows to exact tuples and require a common dimension."""
    matrix = tuple(as_point(row) for row in rows)
    if matrix:
        width = len(matrix[0])
        for row in matrix:
            if len(row) != width:
                raise DimensionMismatch(
                    f"rows of mixed dimension: {len(row)} != {width}"
                )
    return matrix


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise DimensionMismatch(f"dot product of lengths {len(a)} and {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))
