"""Exact integer and rational helpers shared by the statistics and the formula table."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt, lcm

__all__ = ["harmonic", "lcm_upto", "is_prime", "format_rational", "parse_rational"]


@lru_cache(maxsize=None)
def harmonic(m: int) -> Fraction:
    """``H_m = 1 + 1/2 + ... + 1/m``, with ``H_0 = 0``."""
    if m < 0:
        raise ValueError("harmonic number needs m >= 0")
    return sum((Fraction(1, i) for i in range(1, m + 1)), Fraction(0))


@lru_cache(maxsize=None)
def lcm_upto(m: int) -> int:
    """``lcm{1, ..., m}``."""
    if m < 1:
        raise ValueError("lcm_upto needs m >= 1")
    return lcm(*range(1, m + 1))


def is_prime(v: int) -> bool:
    # Trial division; arguments never exceed n^2 + 1.
    if v < 2:
        return False
    if v < 4:
        return True
    if v % 2 == 0:
        return False
    for d in range(3, isqrt(v) + 1, 2):
        if v % d == 0:
            return False
    return True


def format_rational(q: Fraction | int) -> str:
    """``"p/q"`` in lowest terms, or a bare integer when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)
