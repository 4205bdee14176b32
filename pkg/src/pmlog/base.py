"""Shared primitives: the plus/minus selector, resource limits, p-adic valuation."""

from __future__ import annotations

import enum
from fractions import Fraction

# Largest exhaustive enumeration (set size, root count, coset count) any
# operation will attempt before raising ResourceCapError.
ENUMERATION_CAP = 10**6


class ResourceCapError(Exception):
    """An operation would enumerate past the configured cap."""


class ConvergenceError(Exception):
    """An iterative construction failed to stabilize under its factor cap."""


class Sign(enum.Enum):
    """Selector for the plus/minus halves of every paired construction."""

    PLUS = "+"
    MINUS = "-"

    @classmethod
    def from_str(cls, token: str) -> "Sign":
        for sign in cls:
            if sign.value == token:
                return sign
        raise ValueError(f"unknown sign {token!r}, expected '+' or '-'")

    def __str__(self) -> str:
        return self.value


def pval(q: Fraction | int, p: int) -> int:
    """p-adic valuation of a nonzero rational (exponent of p in its factorization)."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("the zero rational has no finite p-adic valuation")
    num, den = q.numerator, q.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v
