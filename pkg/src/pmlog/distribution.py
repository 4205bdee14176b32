"""The plus/minus distributions on Z_p: closed-form values, the character-sum
oracle, integration of step functions, and the interpolation identities.

The closed form is a digit test: the plus distribution gives a coset
a + p^n Z_p the value p^(-floor((n+2)/2)) exactly when the even-position
digits of a vanish, and zero otherwise; the minus distribution uses the
odd-position digits and exponent floor((n+3)/2).  The oracle recomputes
the same value by a full root-of-unity sum and shares no code with the
digit test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .base import ENUMERATION_CAP, ResourceCapError, Sign, pval
from .cyclotomic import (
    CyclotomicElement,
    character_sum,
    cyclo_poly,
    eval_at_zeta,
    even_product,
    odd_product,
)
from .digits import Prime, Residue, in_S_minus, in_S_plus, residue_from_integer
from .report import Case, VerificationReport

__all__ = [
    "Sign",
    "DistValue",
    "StepFunction",
    "mu_value",
    "mu_oracle",
    "total_mass",
    "integrate",
    "interpolation_rhs",
    "verify_additivity",
]


def _is_negative_p_power(q: Fraction, p: int) -> bool:
    if q.numerator != 1 or q.denominator == 1:
        return False
    den = q.denominator
    while den % p == 0:
        den //= p
    return den == 1


@dataclass(frozen=True)
class DistValue:
    """A distribution value: exactly zero or a pure negative power of p."""

    p: Prime
    value: Fraction

    def __post_init__(self) -> None:
        if self.value != 0 and not _is_negative_p_power(self.value, self.p):
            raise ValueError(f"{self.value} is neither 0 nor a negative power of {self.p}")

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def p_valuation(self) -> int | None:
        return None if self.is_zero else pval(self.value, self.p)

    def __mul__(self, other: "DistValue") -> "DistValue":
        if self.p != other.p:
            raise ValueError("values belong to different primes")
        return DistValue(self.p, self.value * other.value)

    def to_json_dict(self) -> dict:
        return {
            "num": str(self.value.numerator),
            "den": str(self.value.denominator),
            "p_val": self.p_valuation,
            "zero": self.is_zero,
        }


@dataclass(frozen=True)
class StepFunction:
    """A function on Z_p constant on cosets mod p^n, with one value per coset.

    Values may be rationals or cyclotomic elements; rational scalars act on
    either, so integration lands in whatever ring the values inhabit.
    """

    p: Prime
    n: int
    values: Mapping[Residue, object]

    def __post_init__(self) -> None:
        total = self.p**self.n
        if len(self.values) != total:
            raise ValueError(f"expected {total} coset values, got {len(self.values)}")
        for a in range(total):
            if residue_from_integer(a, self.p, self.n) not in self.values:
                raise ValueError(f"missing value for coset {a} mod {self.p}^{self.n}")

    @classmethod
    def from_function(cls, p: Prime, n: int, fn: Callable[[int], object]) -> "StepFunction":
        return cls(p, n, {residue_from_integer(a, p, n): fn(a) for a in range(p**n)})

    @classmethod
    def indicator(cls, r: Residue) -> "StepFunction":
        return cls.from_function(r.p, r.n, lambda a: Fraction(1 if a == r.value else 0))

    @classmethod
    def constant(cls, p: Prime, n: int, c) -> "StepFunction":
        return cls.from_function(p, n, lambda a: c)


def mu_value(sign: Sign, r: Residue) -> DistValue:
    """Closed-form distribution value of the coset r, by the digit test."""
    if sign is Sign.PLUS:
        if in_S_plus(r):
            return DistValue(r.p, Fraction(1, r.p ** ((r.n + 2) // 2)))
    else:
        if in_S_minus(r):
            return DistValue(r.p, Fraction(1, r.p ** ((r.n + 3) // 2)))
    return DistValue(r.p, Fraction(0))


def mu_oracle(sign: Sign, r: Residue) -> DistValue:
    """The same value recomputed by a root-of-unity character sum.

    Expands the even (plus) or odd (minus) cyclotomic product as a sparse
    polynomial, shifts its exponents by -a, collapses the full character
    sum, and rescales.  Independent of the digit test by construction.
    """
    p, n, a = r.p, r.n, r.value
    if p**n > ENUMERATION_CAP:
        raise ResourceCapError(f"{p}^{n} roots of unity exceed the enumeration cap")
    if sign is Sign.PLUS:
        poly = even_product(p, n // 2)
        scale = (3 * n + 2) // 2
    else:
        poly = odd_product(p, (n + 1) // 2)
        scale = (3 * n + 1) // 2 + 1
    shifted = {e - a: c for e, c in poly.items()}
    return DistValue(p, character_sum(p, n, shifted) / p**scale)


def total_mass(sign: Sign, p: Prime) -> Fraction:
    """The measure of all of Z_p, computed over the level-1 cosets."""
    return sum(
        (mu_value(sign, residue_from_integer(a, p, 1)).value for a in range(p)),
        Fraction(0),
    )


def integrate(sign: Sign, f: StepFunction):
    """Integrate a step function: the finite sum of coset values times masses.

    Returns a rational for rational-valued f and a cyclotomic element for
    element-valued f.
    """
    total = None
    for a in range(f.p**f.n):
        r = residue_from_integer(a, f.p, f.n)
        mass = mu_value(sign, r)
        if mass.is_zero:
            continue
        term = f.values[r] * mass.value
        total = term if total is None else total + term
    # The zero coset always carries mass, so total is never None here.
    return total


def interpolation_rhs(sign: Sign, k: int, p: Prime, n: int) -> CyclotomicElement:
    """The closed-form value of the plus/minus logarithm at zeta_k - 1, as an
    element of the level-n ring (1 <= k <= n).

    Zero when the parity of k disagrees with the sign; otherwise a scaled
    product of cyclotomic values at zeta_k.  For k below the matching
    parity level, extra factors evaluate to p and cancel against the
    matching power of p in the prefactor, so the level used internally is
    n rounded up to the right parity.
    """
    if not 1 <= k <= n:
        raise ValueError("require 1 <= k <= n")
    if sign is Sign.PLUS:
        if k % 2 == 0:
            return CyclotomicElement.zero(p, n)
        level = n if n % 2 == 1 else n + 1
        count, first = (level - 1) // 2, 2
        prefactor = Fraction(1, p ** ((level + 1) // 2))
    else:
        if k % 2 == 1:
            return CyclotomicElement.zero(p, n)
        level = n if n % 2 == 0 else n + 1
        count, first = level // 2, 1
        prefactor = Fraction(1, p ** (level // 2 + 1))
    zeta_exp = p ** (n - k)  # zeta_k as a power of the level-n root
    acc = CyclotomicElement.one(p, n)
    m = first
    for _ in range(count):
        phi = cyclo_poly(p, m)
        acc = acc * eval_at_zeta({e * zeta_exp: c for e, c in phi.coefficients.items()}, p, n)
        m += 2
    return acc * prefactor


def verify_additivity(sign: Sign, p: Prime, n: int) -> VerificationReport:
    """Check that refining every coset mod p^n into its p children mod p^(n+1)
    preserves the assigned mass."""
    if p ** (n + 1) > ENUMERATION_CAP:
        raise ResourceCapError(f"{p}^{n + 1} cosets exceed the enumeration cap")
    cases = []
    for a in range(p**n):
        parent = mu_value(sign, residue_from_integer(a, p, n)).value
        children = sum(
            (mu_value(sign, residue_from_integer(a + j * p**n, p, n + 1)).value for j in range(p)),
            Fraction(0),
        )
        cases.append(
            Case(
                input=f"sign={sign} a={a} mod {p}^{n}",
                expected=str(parent),
                actual=str(children),
                passed=children == parent,
            )
        )
    return VerificationReport(
        suite="additivity",
        parameters={"sign": str(sign), "p": int(p), "n": n},
        cases=cases,
    )
