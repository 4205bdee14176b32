"""Exact plus/minus p-adic logarithms, the distributions behind them, and
machine checks of the identities relating the two descriptions.

Everything is computed in exact rational arithmetic: residues mod p^n as
digit vectors, p-power cyclotomic quotient rings, truncated power series
with tracked p-adic guarantees, and the distribution values themselves
(always zero or a pure negative power of p).
"""

__version__ = "0.1.0"

from .base import ENUMERATION_CAP, ConvergenceError, ResourceCapError, Sign, pval
from .bivariate import BiResidue, BiSign, biamice_check, bimu_oracle, bimu_value
from .cyclotomic import (
    CycloPoly,
    CyclotomicElement,
    character_sum,
    character_sum_bruteforce,
    cyclo_poly,
    eval_at_zeta,
    even_product,
    odd_product,
    zeta_power,
)
from .digits import (
    Prime,
    Residue,
    enumerate_R,
    in_S_minus,
    in_S_plus,
    residue_from_integer,
)
from .distribution import (
    DistValue,
    StepFunction,
    integrate,
    interpolation_rhs,
    mu_oracle,
    mu_value,
    total_mass,
    verify_additivity,
)
from .report import Case, VerificationReport
from .series import (
    FACTOR_CAP,
    SeriesPrecision,
    TruncatedSeries,
    build_log_pm,
    coefficient_valuation_profile,
    log_pm_partial_product,
    phi_shifted,
    series_log_classical,
    stabilization_factor_count,
    verify_product_identity,
)

__all__ = [
    "__version__",
    "ENUMERATION_CAP",
    "FACTOR_CAP",
    "ConvergenceError",
    "ResourceCapError",
    "Sign",
    "pval",
    "Prime",
    "Residue",
    "residue_from_integer",
    "in_S_plus",
    "in_S_minus",
    "enumerate_R",
    "CycloPoly",
    "CyclotomicElement",
    "cyclo_poly",
    "even_product",
    "odd_product",
    "zeta_power",
    "character_sum",
    "character_sum_bruteforce",
    "eval_at_zeta",
    "SeriesPrecision",
    "TruncatedSeries",
    "series_log_classical",
    "phi_shifted",
    "build_log_pm",
    "log_pm_partial_product",
    "stabilization_factor_count",
    "verify_product_identity",
    "coefficient_valuation_profile",
    "DistValue",
    "StepFunction",
    "mu_value",
    "mu_oracle",
    "total_mass",
    "integrate",
    "interpolation_rhs",
    "verify_additivity",
    "BiSign",
    "BiResidue",
    "bimu_value",
    "bimu_oracle",
    "biamice_check",
    "Case",
    "VerificationReport",
]
