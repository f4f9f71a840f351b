"""Numerical invariants of the Brill-Noether curve ``W = W^1_{a+2}(C)``.

Throughout, ``C`` is a general curve of genus ``g = 2a + 1`` with ``a >= 2``,
``L`` is a point of ``W`` (a pencil of degree ``a + 2``) and
``M = omega_C (x) L^-1`` is the residual series of degree ``3a - 2``.
Everything is computed exactly; any quantity that must be an integer is
certified as one and raises :class:`NonIntegralResult` otherwise.

Notes on conventions:

* The genus formula is written ``a/(a+2) * 2g!/(a!(a+1)!) + 1``.  ``2g!``
  means ``2 * (g!)``; reading it as ``(2g)!`` gives non-integral or wrong
  values, whereas ``2 * (g!)`` gives ``g(W) = 11`` for ``a = 2`` and
  ``g(W) = 169`` for ``a = 4``.
* The secant count is classically stated for ``a >= 3``.  At ``a = 2`` the
  same alternating sum equals 1, matching the involution
  ``L -> omega_C (x) L^-1`` of ``W^1_4`` in genus 5, so ``a = 2`` is allowed
  everywhere.  The geometric reading as secant planes to the residual
  embedding only makes sense from ``a >= 3`` (``a >= 4`` for an embedding
  in ``P^{a-1}`` with finitely many ``(a-3)``-planes).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from bncalc.exactmath import as_integer, binomial, decimal_str, exact_div, factorial

__all__ = [
    "COLUMNS",
    "CurveParams",
    "DivisorClassExpr",
    "Generator",
    "InternalInconsistency",
    "InvariantSet",
    "NormEndoPoly",
    "alpha",
    "alpha_closed",
    "beta",
    "class_coefficient_identity",
    "contradiction_guard",
    "curve_params",
    "deg_gamma_closed",
    "deg_gamma_sum",
    "deg_gamma_terms",
    "dim_Z",
    "exponent",
    "full_invariants",
    "gamma_class",
    "genus_W",
    "norm_endo_poly",
    "rho",
    "secant_sum_class",
    "total_degree_m",
]

COLUMNS = ("a", "g", "genus_W", "exponent", "deg_gamma", "alpha", "beta", "m", "dim_Z", "rho")


class InternalInconsistency(AssertionError):
    """Two computed invariants violate an identity that must hold between them."""


def _require_a(a: int, minimum: int = 2) -> None:
    if not isinstance(a, int) or isinstance(a, bool):
        raise TypeError(f"a must be an int, got {type(a).__name__}")
    if a < minimum:
        raise ValueError(f"a must be ≥ {minimum}, got {a}")


@dataclass(frozen=True, slots=True)
class CurveParams:
    a: int
    g: int
    deg_omega: int
    deg_L: int
    deg_M: int

    def __post_init__(self) -> None:
        _require_a(self.a)
        if self.g != 2 * self.a + 1:
            raise ValueError("g must equal 2a+1")
        if self.deg_omega != self.deg_L + self.deg_M:
            raise ValueError("deg omega must equal deg L + deg M")


def curve_params(a: int) -> CurveParams:
    _require_a(a)
    g = 2 * a + 1
    return CurveParams(a=a, g=g, deg_omega=2 * g - 2, deg_L=a + 2, deg_M=3 * a - 2)


# --------------------------------------------------------------------------
# divisor classes


@dataclass(frozen=True, slots=True)
class Generator:
    """A named line bundle on ``C`` together with its degree."""

    name: str
    degree: int


@dataclass(frozen=True, slots=True)
class DivisorClassExpr:
    """``gen1^e1 (x) gen2^e2`` in ``Pic(C)``.

    The degree is always recomputed from the generators, never stored.
    """

    basis: tuple[Generator, Generator]
    exponents: tuple[int, int]

    @property
    def degree(self) -> int:
        (g1, g2), (e1, e2) = self.basis, self.exponents
        return e1 * g1.degree + e2 * g2.degree

    def exponent_of(self, name: str) -> int:
        for gen, exp in zip(self.basis, self.exponents):
            if gen.name == name:
                return exp
        raise KeyError(name)

    def render(self, unicode: bool = True) -> str:
        """``"M^30 ω^-8"``-style rendering; ``unicode=False`` spells out omega."""
        parts = []
        for gen, exp in zip(self.basis, self.exponents):
            name = gen.name if unicode else gen.name.replace("ω", "omega")
            parts.append(f"{name}^{decimal_str(exp)}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


OMEGA = "ω"


def omega(a: int) -> Generator:
    return Generator(OMEGA, curve_params(a).deg_omega)


def pencil(a: int) -> Generator:
    return Generator("L", curve_params(a).deg_L)


def residual(a: int) -> Generator:
    return Generator("M", curve_params(a).deg_M)


def to_residual_basis(expr: DivisorClassExpr, a: int) -> DivisorClassExpr:
    """Rewrite ``omega^x L^y`` as ``M^-y omega^(x+y)`` using ``L = omega M^-1``."""
    if tuple(gen.name for gen in expr.basis) != (OMEGA, "L"):
        raise ValueError("expected an expression in the (omega, L) basis")
    x, y = expr.exponents
    return DivisorClassExpr((residual(a), omega(a)), (-y, x + y))


# --------------------------------------------------------------------------
# scalar invariants


def rho(g: int, r: int, d: int) -> int:
    """Brill-Noether number ``g - (r+1)(g-d+r)``."""
    return g - (r + 1) * (g - d + r)


def exponent(a: int) -> int:
    """The Catalan number ``(2a)! / (a! (a+1)!)``."""
    _require_a(a, 1)
    return exact_div(factorial(2 * a), factorial(a) * factorial(a + 1))


def genus_W(a: int) -> int:
    _require_a(a)
    g = 2 * a + 1
    value = Fraction(a, a + 2) * Fraction(2 * factorial(g), factorial(a) * factorial(a + 1)) + 1
    return as_integer(value)


def deg_gamma_terms(a: int) -> list[int]:
    """Signed summands of the secant count before the ``1/(a+2)`` prefactor."""
    _require_a(a)
    # term i is (-1)^i C(a, a-2-i) C(2a-i, a-1-i); consecutive terms differ
    # by the factor -(a-2-i)(a-1-i) / ((i+3)(2a-i))
    term = binomial(a, a - 2) * binomial(2 * a, a - 1)
    terms = [term]
    for i in range(a - 2):
        term = -exact_div(term * ((a - 2 - i) * (a - 1 - i)), (i + 3) * (2 * a - i))
        terms.append(term)
    return terms


def deg_gamma_sum(a: int) -> int:
    """Degree of the secant correspondence, via the alternating Castelnuovo sum."""
    return as_integer(Fraction(sum(deg_gamma_terms(a)), a + 2))


def deg_gamma_closed(a: int) -> int:
    """Closed form ``1 + e(2a+1)(a-2)/(a+2)``; independent of the alternating sum."""
    _require_a(a)
    return 1 + exact_div(exponent(a) * (2 * a + 1) * (a - 2), a + 2)


def alpha(a: int) -> int:
    """Exponent of ``omega_C`` in ``gamma(L)``: ``(a+2)/(4a) * (g(W) - 1 - e(g-1))``."""
    _require_a(a)
    g = 2 * a + 1
    value = Fraction(a + 2, 4 * a) * (genus_W(a) - 1 - exponent(a) * (g - 1))
    return as_integer(value)


def alpha_closed(a: int) -> int:
    """``e (a-1) / 2``, the simplified form of :func:`alpha`."""
    _require_a(a)
    return exact_div(exponent(a) * (a - 1), 2)


def beta(a: int) -> int:
    _require_a(a)
    return 1 - exponent(a)


def total_degree_m(a: int) -> int:
    _require_a(a)
    return (a + 2) * deg_gamma_sum(a)


def gamma_class(a: int) -> DivisorClassExpr:
    """``gamma(L) = omega^alpha (x) L^beta`` in the (omega, L) basis."""
    return DivisorClassExpr((omega(a), pencil(a)), (alpha(a), beta(a)))


def secant_sum_class(a: int) -> DivisorClassExpr:
    """Class of the sum of all secant divisors, in the (M, omega) basis.

    Since ``gamma(L) = M^deg_gamma (-sum D_i)``, the sum is
    ``M^deg_gamma (x) gamma(L)^-1``.
    """
    gamma = to_residual_basis(gamma_class(a), a)
    m_exp, w_exp = gamma.exponents
    return DivisorClassExpr(gamma.basis, (deg_gamma_sum(a) - m_exp, -w_exp))


def dim_Z(a: int) -> int:
    """``((e-1) g(W) + deg gamma) / e``."""
    e = exponent(a)
    return exact_div((e - 1) * genus_W(a) + deg_gamma_sum(a), e)


def contradiction_guard(a: int) -> bool:
    """True when ``(e-2) g(W) != -2 deg gamma``."""
    return (exponent(a) - 2) * genus_W(a) != -2 * deg_gamma_sum(a)


def class_coefficient_identity(a: int) -> bool:
    """``1/(a!(a+1)!) == e/(2a)!`` as exact rationals."""
    _require_a(a)
    lhs = Fraction(1, factorial(a) * factorial(a + 1))
    rhs = Fraction(exponent(a), factorial(2 * a))
    return lhs == rhs


# --------------------------------------------------------------------------
# norm endomorphism


@dataclass(frozen=True, slots=True)
class NormEndoPoly:
    """The monic quadratic ``x^2 + (e-2)x - (e-1) = (x - 1)(x - (1-e))``."""

    e: int
    coefficients: tuple[int, int, int]
    roots: tuple[int, int]

    def __call__(self, x: int) -> int:
        c2, c1, c0 = self.coefficients
        return (c2 * x + c1) * x + c0

    def expanded_from_roots(self) -> tuple[int, int, int]:
        r1, r2 = self.roots
        return (1, -(r1 + r2), r1 * r2)

    def __str__(self) -> str:
        _, c1, c0 = self.coefficients
        out = "x^2"
        if c1:
            coeff = "" if abs(c1) == 1 else decimal_str(abs(c1))
            out += f" {'+' if c1 > 0 else '-'} {coeff}x"
        if c0:
            out += f" {'+' if c0 > 0 else '-'} {decimal_str(abs(c0))}"
        return out


def norm_endo_poly(e: int) -> NormEndoPoly:
    if e < 2:
        raise ValueError(f"e must be ≥ 2, got {e}")
    poly = NormEndoPoly(e=e, coefficients=(1, e - 2, -(e - 1)), roots=(1, 1 - e))
    if poly.expanded_from_roots() != poly.coefficients or any(poly(r) for r in poly.roots):
        raise InternalInconsistency(f"quadratic for e={decimal_str(e)} does not vanish at its roots")
    return poly


# --------------------------------------------------------------------------
# aggregate record


@dataclass(frozen=True, slots=True)
class InvariantSet:
    params: CurveParams
    genus_W: int
    exponent_e: int
    deg_gamma: int
    alpha: int
    beta: int
    m: int
    dim_P: int
    dim_Z: int
    rho: int

    def as_row(self) -> dict[str, int]:
        """Values keyed by the fixed output column order."""
        return {
            "a": self.params.a,
            "g": self.params.g,
            "genus_W": self.genus_W,
            "exponent": self.exponent_e,
            "deg_gamma": self.deg_gamma,
            "alpha": self.alpha,
            "beta": self.beta,
            "m": self.m,
            "dim_Z": self.dim_Z,
            "rho": self.rho,
        }

    def inconsistencies(self) -> list[str]:
        p, e = self.params, self.exponent_e
        problems = []

        def expect(label: str, lhs: int, rhs: int) -> None:
            if lhs != rhs:
                problems.append(f"{label}: {decimal_str(lhs)} != {decimal_str(rhs)}")

        expect("g(W) - deg gamma = e g", self.genus_W - self.deg_gamma, e * p.g)
        expect("beta = 1 - e", self.beta, 1 - e)
        expect("alpha = e(a-1)/2", 2 * self.alpha, e * (p.a - 1))
        expect("m = (a+2) deg gamma", self.m, (p.a + 2) * self.deg_gamma)
        expect("alpha deg omega + beta deg L = m", self.alpha * p.deg_omega + self.beta * p.deg_L, self.m)
        expect("dim Z = g(W) - g", self.dim_Z, self.genus_W - p.g)
        expect("e dim Z = (e-1) g(W) + deg gamma", e * self.dim_Z, (e - 1) * self.genus_W + self.deg_gamma)
        expect("dim P = g", self.dim_P, p.g)
        expect("rho = 1", self.rho, 1)
        if (e - 2) * self.genus_W == -2 * self.deg_gamma:
            problems.append("(e-2) g(W) = -2 deg gamma")
        return problems


def full_invariants(a: int) -> InvariantSet:
    params = curve_params(a)
    e = exponent(a)
    deg_gamma = deg_gamma_sum(a)
    if deg_gamma != deg_gamma_closed(a):
        raise InternalInconsistency(f"a={a}: alternating sum and closed form for deg gamma disagree")
    inv = InvariantSet(
        params=params,
        genus_W=genus_W(a),
        exponent_e=e,
        deg_gamma=deg_gamma,
        alpha=alpha(a),
        beta=beta(a),
        m=total_degree_m(a),
        dim_P=params.g,
        dim_Z=dim_Z(a),
        rho=rho(params.g, 1, params.deg_L),
    )
    problems = inv.inconsistencies()
    if problems:
        raise InternalInconsistency(f"a={a}: " + "; ".join(problems))
    return inv
