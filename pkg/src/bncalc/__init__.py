"""Exact invariants of the Brill-Noether curve of a general odd-genus curve.

For a general curve of genus ``g = 2a + 1`` the locus of degree ``a + 2``
pencils is a smooth curve ``W``.  This package computes, in exact integer
and rational arithmetic, the numbers attached to ``W`` and to the secant
correspondence on it, and checks the identities relating them.
"""

from bncalc.exactmath import (
    ExactRational,
    NonIntegralResult,
    binomial,
    exact_div,
    factorial,
)
from bncalc.invariants import (
    CurveParams,
    DivisorClassExpr,
    InternalInconsistency,
    InvariantSet,
    NormEndoPoly,
    alpha,
    beta,
    class_coefficient_identity,
    contradiction_guard,
    curve_params,
    deg_gamma_closed,
    deg_gamma_sum,
    dim_Z,
    exponent,
    full_invariants,
    gamma_class,
    genus_W,
    norm_endo_poly,
    rho,
    secant_sum_class,
    total_degree_m,
)
from bncalc.verify import (
    CHECKS,
    CheckResult,
    CheckSpec,
    UnknownCheckName,
    UnknownExampleName,
    VerificationReport,
    reproduce_example,
    run_checks,
)

__version__ = "0.1.0"

__all__ = [
    "CHECKS",
    "CheckResult",
    "CheckSpec",
    "CurveParams",
    "DivisorClassExpr",
    "ExactRational",
    "InternalInconsistency",
    "InvariantSet",
    "NonIntegralResult",
    "NormEndoPoly",
    "UnknownCheckName",
    "UnknownExampleName",
    "VerificationReport",
    "alpha",
    "beta",
    "binomial",
    "class_coefficient_identity",
    "contradiction_guard",
    "curve_params",
    "deg_gamma_closed",
    "deg_gamma_sum",
    "dim_Z",
    "exact_div",
    "exponent",
    "factorial",
    "full_invariants",
    "gamma_class",
    "genus_W",
    "norm_endo_poly",
    "reproduce_example",
    "rho",
    "run_checks",
    "secant_sum_class",
    "total_degree_m",
]
