"""Exact integer and rational primitives shared by every module.

Everything in this package computes exactly: Python ints are unbounded and
rationals are stdlib ``fractions.Fraction`` values (always in lowest terms,
denominator positive).  No float enters any coefficient path.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable

Rational = Fraction


def falling(x: int, j: int) -> int:
    """Falling factorial x(x-1)...(x-j+1); the empty product 1 for j = 0."""
    if j < 0:
        raise ValueError(f"falling factorial needs j >= 0, got {j}")
    out = 1
    for t in range(j):
        out *= x - t
    return out


def gcd_list(values: Iterable[int]) -> int:
    """gcd of a nonempty collection of positive integers."""
    vals = list(values)
    if not vals:
        raise ValueError("no roots: gcd undefined for an empty list")
    if any(v < 1 for v in vals):
        raise ValueError("gcd_list expects positive integers")
    return reduce(math.gcd, vals)


def format_rational(value: Fraction | int) -> str:
    """Exact "num/den" form used in all JSON output (never a float)."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" or a bare integer string."""
    return Fraction(text.strip())
