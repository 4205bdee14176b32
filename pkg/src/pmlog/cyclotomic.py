"""Exact arithmetic in p-power cyclotomic rings and root-of-unity sums.

The p^n-th cyclotomic polynomial is taken in the p-power form
Phi(p, n)(T) = sum_{t < p} T^(p^(n-1) t).  The quotient ring
Q[x] / Phi(p, n)(x) is represented densely on the power basis
1, x, ..., x^(d-1) with d = p^(n-1)(p-1); the class of x is the
distinguished primitive p^n-th root of unity zeta.  Every p^n-th root of
unity, primitive or not, is a power of zeta, so a single ring per (p, n)
carries all the character sums.

Reduction uses two facts: x^(p^n) = 1 in the quotient, and
x^d = -(1 + x^h + x^(2h) + ... + x^((p-2)h)) with h = p^(n-1), which
rewrites any monomial as at most p-1 basis terms.

Products of even- or odd-indexed Phi's stay sparse (p^count monomials
with unit coefficients), so they are kept as exponent-to-coefficient
maps rather than ring elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .base import ENUMERATION_CAP, ResourceCapError
from .digits import Prime

SparsePoly = dict[int, int]


@dataclass(frozen=True)
class CycloPoly:
    """The p^level-th cyclotomic polynomial as a sparse exponent map."""

    p: Prime
    level: int
    coefficients: Mapping[int, int]

    @property
    def degree(self) -> int:
        return self.p ** (self.level - 1) * (self.p - 1)


def cyclo_poly(p: Prime, n: int) -> CycloPoly:
    """The p^n-th cyclotomic polynomial: p unit monomials at multiples of p^(n-1)."""
    if n < 1:
        raise ValueError("level n must be >= 1")
    h = p ** (n - 1)
    return CycloPoly(p=p, level=n, coefficients={h * t: 1 for t in range(p)})


def _sparse_mul(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    out: SparsePoly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def _indexed_product(p: Prime, count: int, first: int) -> SparsePoly:
    # Product of Phi(p, m) for m = first, first + 2, ..., first + 2(count - 1).
    if count < 0:
        raise ValueError("count must be >= 0")
    if p**count > ENUMERATION_CAP:
        raise ResourceCapError(f"support of {p}^{count} terms exceeds the enumeration cap")
    prod: SparsePoly = {0: 1}
    m = first
    for _ in range(count):
        prod = _sparse_mul(prod, dict(cyclo_poly(p, m).coefficients))
        m += 2
    return prod


def even_product(p: Prime, count: int) -> SparsePoly:
    """Multiply out the cyclotomic polynomials at even levels 2, 4, ..., 2*count."""
    return _indexed_product(p, count, first=2)


def odd_product(p: Prime, count: int) -> SparsePoly:
    """Multiply out the cyclotomic polynomials at odd levels 1, 3, ..., 2*count - 1."""
    return _indexed_product(p, count, first=1)


def _ring_dim(p: int, n: int) -> int:
    return p ** (n - 1) * (p - 1)


def _monomial_terms(p: int, n: int, e: int) -> Iterator[tuple[int, int]]:
    # Canonical reduction of x^e: yields (basis index, +-1) pairs.
    h = p ** (n - 1)
    d = h * (p - 1)
    e %= p**n
    if e < d:
        yield (e, 1)
    else:
        r = e - d  # 0 <= r < h
        for t in range(p - 1):
            yield (r + t * h, -1)


@dataclass(frozen=True)
class CyclotomicElement:
    """An element of Q[x] / Phi(p, level)(x) on the power basis of x."""

    p: Prime
    level: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError("level must be >= 1")
        if len(self.coeffs) != _ring_dim(self.p, self.level):
            raise ValueError(
                f"expected {_ring_dim(self.p, self.level)} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, p: Prime, n: int) -> "CyclotomicElement":
        return cls(p, n, (Fraction(0),) * _ring_dim(p, n))

    @classmethod
    def one(cls, p: Prime, n: int) -> "CyclotomicElement":
        return cls.from_rational(p, n, Fraction(1))

    @classmethod
    def from_rational(cls, p: Prime, n: int, q: Fraction | int) -> "CyclotomicElement":
        coeffs = [Fraction(0)] * _ring_dim(p, n)
        coeffs[0] = Fraction(q)
        return cls(p, n, tuple(coeffs))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element has nonzero coefficients above degree 0")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check_same_ring(self, other: "CyclotomicElement") -> None:
        if self.p != other.p or self.level != other.level:
            raise ValueError("elements live in different cyclotomic rings")

    def __add__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._check_same_ring(other)
        return CyclotomicElement(
            self.p, self.level, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._check_same_ring(other)
        return CyclotomicElement(
            self.p, self.level, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "CyclotomicElement":
        return CyclotomicElement(self.p, self.level, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CyclotomicElement(self.p, self.level, tuple(a * q for a in self.coeffs))
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        self._check_same_ring(other)
        d = len(self.coeffs)
        conv = [Fraction(0)] * (2 * d - 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coeffs):
                if cj == 0:
                    continue
                conv[i + j] += ci * cj
        out = [Fraction(0)] * d
        for e, c in enumerate(conv):
            if c == 0:
                continue
            for idx, s in _monomial_terms(self.p, self.level, e):
                out[idx] += s * c
        return CyclotomicElement(self.p, self.level, tuple(out))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __str__(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                var = "z" if e == 1 else f"z^{e}"
                terms.append(var if c == 1 else f"{c}*{var}")
        return " + ".join(terms) if terms else "0"


def zeta_power(p: Prime, n: int, e: int) -> CyclotomicElement:
    """The canonical reduction of zeta^e in the level-n ring; e may be negative."""
    if n < 1:
        raise ValueError("level n must be >= 1")
    coeffs = [Fraction(0)] * _ring_dim(p, n)
    for idx, s in _monomial_terms(p, n, e):
        coeffs[idx] += s
    return CyclotomicElement(p, n, tuple(coeffs))


def eval_at_zeta(poly, p: Prime, n: int) -> CyclotomicElement:
    """Substitute x -> zeta into a sparse polynomial and reduce.

    Accepts a CycloPoly or any exponent-to-coefficient mapping; exponents
    may be negative, coefficients integral or rational.
    """
    items = poly.coefficients if isinstance(poly, CycloPoly) else poly
    coeffs = [Fraction(0)] * _ring_dim(p, n)
    for e, c in items.items():
        if c == 0:
            continue
        for idx, s in _monomial_terms(p, n, e):
            coeffs[idx] += s * c
    return CyclotomicElement(p, n, tuple(coeffs))


def character_sum(p: Prime, n: int, weights: Mapping[int, Fraction | int]) -> Fraction:
    """Sum over all p^n-th roots of unity zeta of sum_e weights[e] * zeta^(k e).

    Uses the collapse law: summing zeta^(k m) over the full group of p^n-th
    roots gives p^n when p^n divides m and 0 otherwise, so the double sum
    reduces to the weights at exponents divisible by p^n.  The literal
    root-by-root evaluation is kept in character_sum_bruteforce as an
    independent check.
    """
    order = p**n
    total = Fraction(0)
    for e, w in weights.items():
        if e % order == 0:
            total += w
    return order * total


def character_sum_bruteforce(p: Prime, n: int, weights: Mapping[int, Fraction | int]) -> Fraction:
    """Evaluate the same sum root by root in the cyclotomic ring (verification only)."""
    order = p**n
    if order > ENUMERATION_CAP:
        raise ResourceCapError(f"{order} roots exceed the enumeration cap")
    acc = [Fraction(0)] * _ring_dim(p, n)
    for k in range(order):
        for e, w in weights.items():
            if w == 0:
                continue
            for idx, s in _monomial_terms(p, n, k * e):
                acc[idx] += s * w
    elem = CyclotomicElement(p, n, tuple(acc))
    if not elem.is_rational():
        raise ValueError("character sum did not collapse to a rational")
    return elem.rational_value()
