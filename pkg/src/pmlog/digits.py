"""Exact residue arithmetic mod p^n and the digit-pattern support sets.

A residue class a + p^n Z_p is stored as its little-endian base-p digit
vector (d_0 is the units digit), so parity-of-position tests are direct.
The plus support set S(n, +) collects residues whose even-position digits
all vanish; S(n, -) requires the odd-position digits to vanish.  The
companion integer sets R(count, +-) hold the sums of digits placed on odd
(plus) or even (minus) p-power positions; reducing them mod p^n recovers
the S sets, which is checked in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .base import ENUMERATION_CAP, ResourceCapError, Sign


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    r = math.isqrt(p)
    while f <= r:
        if p % f == 0:
            return False
        f += 2
    return True


class Prime(int):
    """A prime integer, checked deterministically (trial division) on construction."""

    __slots__ = ()

    def __new__(cls, p: int) -> "Prime":
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        return super().__new__(cls, p)


@dataclass(frozen=True)
class Residue:
    """A congruence class a mod p^n as a little-endian base-p digit vector."""

    p: Prime
    n: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("modulus exponent n must be >= 1")
        if len(self.digits) != self.n:
            raise ValueError(f"expected {self.n} digits, got {len(self.digits)}")
        if any(d < 0 or d >= self.p for d in self.digits):
            raise ValueError(f"digits must lie in [0, {self.p - 1}]")

    @property
    def value(self) -> int:
        """The canonical representative in [0, p^n)."""
        total = 0
        for d in reversed(self.digits):
            total = total * self.p + d
        return total

    def __str__(self) -> str:
        return f"{self.value} mod {self.p}^{self.n}"


def residue_from_integer(a: int, p: Prime, n: int) -> Residue:
    """Reduce a into [0, p^n) and expand it in base p.

    Negative and oversized integers are reduced silently, so callers may
    iterate with signed loop counters.
    """
    if n < 1:
        raise ValueError("modulus exponent n must be >= 1")
    a %= p**n
    digits = []
    for _ in range(n):
        a, d = divmod(a, p)
        digits.append(d)
    return Residue(p=p, n=n, digits=tuple(digits))


def in_S_plus(r: Residue) -> bool:
    """True iff every even-position digit of r vanishes."""
    return all(d == 0 for pos, d in enumerate(r.digits) if pos % 2 == 0)


def in_S_minus(r: Residue) -> bool:
    """True iff every odd-position digit of r vanishes."""
    return all(d == 0 for pos, d in enumerate(r.digits) if pos % 2 == 1)


def enumerate_R(p: Prime, count: int, sign: Sign) -> set[int]:
    """All sums over digit choices a_l in [0, p-1] of a_l p^(2l+1) (plus)
    or a_l p^(2l) (minus), for l < count.  count = 0 gives {0}.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    if p**count > ENUMERATION_CAP:
        raise ResourceCapError(f"{p}^{count} elements exceed the enumeration cap {ENUMERATION_CAP}")
    parity = 1 if sign is Sign.PLUS else 0
    result = {0}
    for l in range(count):
        step = p ** (2 * l + parity)
        result = {r + a * step for r in result for a in range(p)}
    return result
