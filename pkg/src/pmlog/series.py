"""Truncated power series over Q with joint T-adic and p-adic precision.

The plus/minus logarithms are infinite products

    (1/p) * prod_j Phi(p, e(j))(1 + T) / p,    e(j) = 2j or 2j - 1,

whose factors tend to 1 coefficientwise in the p-adic sense, so a finite
partial product determines every coefficient to any prescribed p-power.
All arithmetic here is exact rational arithmetic; what is tracked on top
is a per-coefficient guarantee g_k meaning "this coefficient matches the
limit modulo p^(g_k)".

Bookkeeping rules:
  * exact constructions start at the working precision M for every k;
  * dividing a series by p lowers each guarantee by one (the constant
    term of Phi(1 + T) / p is p / p = 1 exactly and keeps its guarantee);
  * multiplying two series propagates worst cases: an error of valuation
    a in one factor lands in the product with valuation at least
    a + v_p(other coefficient).

The partial product stops at the first K where appending factor K + 1
moves no coefficient at its guaranteed precision; that stopping rule is
itself the soundness statement the tests assert.  A hard factor cap
turns a bookkeeping bug into a loud error instead of a spin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .base import ConvergenceError, Sign, pval
from .digits import Prime
from .report import Case, VerificationReport

# Sentinel valuation for exact zeros; larger than any guarantee in practice.
_EXACT = 10**9

# Hard bound on the number of partial-product factors.
FACTOR_CAP = 64

DEFAULT_T_PREC = 8
DEFAULT_P_PREC = 6


@dataclass(frozen=True)
class SeriesPrecision:
    """Joint precision: coefficients of T^0 .. T^(t_prec - 1), each mod p^p_prec."""

    t_prec: int
    p_prec: int

    def __post_init__(self) -> None:
        if self.t_prec < 1 or self.p_prec < 1:
            raise ValueError("t_prec and p_prec must be >= 1")


def _vp(q: Fraction, p: int) -> int:
    return _EXACT if q == 0 else pval(q, p)


@dataclass(frozen=True)
class TruncatedSeries:
    """Exact rational coefficients plus per-coefficient p-adic guarantees."""

    p: Prime
    prec: SeriesPrecision
    coeffs: tuple[Fraction, ...]
    guarantees: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.prec.t_prec
        if len(self.coeffs) != n or len(self.guarantees) != n:
            raise ValueError(f"expected {n} coefficients and guarantees")

    @classmethod
    def from_coefficients(cls, p: Prime, prec: SeriesPrecision, coeffs) -> "TruncatedSeries":
        """An exactly known series; every guarantee starts at the working precision."""
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > prec.t_prec:
            raise ValueError("more coefficients than t_prec")
        cs += [Fraction(0)] * (prec.t_prec - len(cs))
        return cls(p, prec, tuple(cs), (prec.p_prec,) * prec.t_prec)

    @classmethod
    def one(cls, p: Prime, prec: SeriesPrecision) -> "TruncatedSeries":
        return cls.from_coefficients(p, prec, [1])

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k]

    def guarantee(self, k: int) -> int:
        return self.guarantees[k]

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self.p != other.p or self.prec != other.prec:
            raise ValueError("series have different primes or precisions")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries(
            self.p,
            self.prec,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
            tuple(min(g, h) for g, h in zip(self.guarantees, other.guarantees)),
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries(
            self.p,
            self.prec,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
            tuple(min(g, h) for g, h in zip(self.guarantees, other.guarantees)),
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        p = self.p
        n = self.prec.t_prec
        coeffs = [Fraction(0)] * n
        guars = [_EXACT] * n
        for i, ci in enumerate(self.coeffs):
            gi = self.guarantees[i]
            vi = _vp(ci, p)
            for j in range(n - i):
                cj = other.coeffs[j]
                gj = other.guarantees[j]
                k = i + j
                coeffs[k] += ci * cj
                worst = min(gi + _vp(cj, p), gj + vi, gi + gj)
                if worst < guars[k]:
                    guars[k] = worst
        return TruncatedSeries(p, self.prec, tuple(coeffs), tuple(guars))

    def scale(self, q: Fraction | int) -> "TruncatedSeries":
        """Multiply by a nonzero rational scalar; guarantees shift by v_p(q)."""
        q = Fraction(q)
        if q == 0:
            raise ValueError("cannot scale by zero")
        shift = pval(q, self.p)
        return TruncatedSeries(
            self.p,
            self.prec,
            tuple(c * q for c in self.coeffs),
            tuple(g + shift for g in self.guarantees),
        )


def series_log_classical(p: Prime, prec: SeriesPrecision) -> TruncatedSeries:
    """The usual logarithm of 1 + T: coefficients (-1)^(k+1) / k, no constant term."""
    coeffs = [Fraction(0)] + [Fraction((-1) ** (k + 1), k) for k in range(1, prec.t_prec)]
    return TruncatedSeries.from_coefficients(p, prec, coeffs)


def phi_shifted(p: Prime, m: int, prec: SeriesPrecision) -> TruncatedSeries:
    """The level-m cyclotomic polynomial evaluated at 1 + T, exactly truncated.

    Coefficient of T^k is sum_{t < p} C(p^(m-1) t, k); the constant term is p.
    """
    if m < 1:
        raise ValueError("level m must be >= 1")
    h = p ** (m - 1)
    coeffs = [sum(math.comb(h * t, k) for t in range(p)) for k in range(prec.t_prec)]
    return TruncatedSeries.from_coefficients(p, prec, coeffs)


def _phi_factor(p: Prime, m: int, prec: SeriesPrecision) -> TruncatedSeries:
    # Phi(p, m)(1 + T) / p: exact on the constant term (p / p = 1), one
    # guarantee lost everywhere else.
    base = phi_shifted(p, m, prec)
    coeffs = tuple(c / p for c in base.coeffs)
    guars = (base.guarantees[0],) + tuple(g - 1 for g in base.guarantees[1:])
    return TruncatedSeries(p, prec, coeffs, guars)


def _factor_level(sign: Sign, j: int) -> int:
    return 2 * j if sign is Sign.PLUS else 2 * j - 1


def _moves_at_precision(extended: TruncatedSeries, product: TruncatedSeries) -> bool:
    # Does appending the next factor change any coefficient at its guarantee?
    for k in range(product.prec.t_prec):
        diff = extended.coeffs[k] - product.coeffs[k]
        if diff != 0 and pval(diff, product.p) < product.guarantees[k]:
            return True
    return False


def _stabilized_product(
    p: Prime, sign: Sign, prec: SeriesPrecision, factor_cap: int
) -> tuple[TruncatedSeries, int]:
    product = TruncatedSeries.one(p, prec)
    count = 0
    while True:
        if count >= factor_cap:
            raise ConvergenceError(
                f"partial product did not stabilize within {factor_cap} factors"
            )
        extended = product * _phi_factor(p, _factor_level(sign, count + 1), prec)
        if not _moves_at_precision(extended, product):
            return product, count
        product = extended
        count += 1


def log_pm_partial_product(
    p: Prime, sign: Sign, prec: SeriesPrecision, factor_count: int
) -> TruncatedSeries:
    """(1/p) times the product of the first factor_count factors, no stopping rule."""
    if factor_count < 0:
        raise ValueError("factor_count must be >= 0")
    product = TruncatedSeries.one(p, prec)
    for j in range(1, factor_count + 1):
        product = product * _phi_factor(p, _factor_level(sign, j), prec)
    return product.scale(Fraction(1, p))


def stabilization_factor_count(
    p: Prime, sign: Sign, prec: SeriesPrecision, factor_cap: int = FACTOR_CAP
) -> int:
    """The number of factors after which the partial product has stabilized."""
    _, count = _stabilized_product(p, sign, prec, factor_cap)
    return count


def build_log_pm(
    p: Prime, sign: Sign, prec: SeriesPrecision, factor_cap: int = FACTOR_CAP
) -> TruncatedSeries:
    """The plus or minus logarithm as a stabilized partial product.

    Multiplies factors Phi(p, e(j))(1 + T) / p, with e(j) even for plus and
    odd for minus, until the next factor moves no coefficient at its
    guaranteed precision, then applies the leading 1/p.
    """
    product, _ = _stabilized_product(p, sign, prec, factor_cap)
    return product.scale(Fraction(1, p))


def verify_product_identity(p: Prime, prec: SeriesPrecision) -> VerificationReport:
    """Check p^2 * T * log_plus * log_minus against the classical logarithm.

    Reports, for every T-power below t_prec, the valuation of the residual
    and the guaranteed bound it must meet; a coefficient passes when the
    residual vanishes or its valuation reaches the bound.
    """
    log_plus = build_log_pm(p, Sign.PLUS, prec)
    log_minus = build_log_pm(p, Sign.MINUS, prec)
    lhs = (log_plus * log_minus).scale(p * p)  # still to be shifted by one T power
    classical = series_log_classical(p, prec)
    cases = []
    for k in range(prec.t_prec):
        if k == 0:
            residual = Fraction(0)  # both sides have no constant term
            bound = classical.guarantees[0]
        else:
            residual = lhs.coeffs[k - 1] - classical.coeffs[k]
            bound = min(lhs.guarantees[k - 1], classical.guarantees[k])
        if residual == 0:
            passed = True
            actual = "v_p(residual) = exact"
        else:
            v = pval(residual, p)
            passed = v >= bound
            actual = f"v_p(residual) = {v}"
        cases.append(
            Case(
                input=f"T^{k}",
                expected=f"v_p(residual) >= {bound}",
                actual=actual,
                passed=passed,
            )
        )
    return VerificationReport(
        suite="logproduct",
        parameters={"p": int(p), "t_prec": prec.t_prec, "p_prec": prec.p_prec},
        cases=cases,
    )


def coefficient_valuation_profile(s: TruncatedSeries) -> list[tuple[int, int | None]]:
    """Per-coefficient valuations; None marks a coefficient that is zero at
    its guaranteed precision (exactly zero or indistinguishable from it)."""
    profile: list[tuple[int, int | None]] = []
    for k, (c, g) in enumerate(zip(s.coeffs, s.guarantees)):
        if c == 0 or pval(c, s.p) >= g:
            profile.append((k, None))
        else:
            profile.append((k, pval(c, s.p)))
    return profile


def dump_dict(s: TruncatedSeries, sign: Sign) -> dict:
    """The stable JSON form of a series: decimal-string big integers throughout."""
    return {
        "p": int(s.p),
        "sign": sign.value,
        "t_prec": s.prec.t_prec,
        "p_prec": s.prec.p_prec,
        "coeffs": [
            {
                "k": k,
                "num": str(c.numerator),
                "den": str(c.denominator),
                "guaranteed_mod_p_pow": g,
            }
            for k, (c, g) in enumerate(zip(s.coeffs, s.guarantees))
        ],
    }
