"""Registry of identity checks and a range runner over the parameter ``a``.

Every check evaluates two exact quantities at one value of ``a`` and
compares them.  Checks resolve the formulas through the
:mod:`bncalc.invariants` module at call time, so swapping a formula there
(see :func:`mutated`) is visible to the whole suite.
"""

from __future__ import annotations

import contextlib
import time
from collections.abc import Callable, Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from bncalc import invariants as inv
from bncalc.exactmath import NonIntegralResult, as_integer, decimal_str, factorial

__all__ = [
    "CHECKS",
    "MUTATIONS",
    "CheckResult",
    "CheckSpec",
    "ExampleRow",
    "UnknownCheckName",
    "UnknownExampleName",
    "VerificationReport",
    "check_names",
    "mutated",
    "reproduce_example",
    "run_checks",
]


class UnknownCheckName(KeyError):
    def __init__(self, names: Iterable[str]) -> None:
        self.names = list(names)
        valid = ", ".join(check_names())
        super().__init__(f"unknown check(s): {', '.join(self.names)}; valid names: {valid}")

    def __str__(self) -> str:
        return self.args[0]


class UnknownExampleName(KeyError):
    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"unknown example {name!r}; valid names: {', '.join(EXAMPLES)}")

    def __str__(self) -> str:
        return self.args[0]


@dataclass(frozen=True, slots=True)
class CheckSpec:
    name: str
    description: str
    anchor: str
    evaluate: Callable[[int], tuple[object, object]] = field(repr=False, compare=False)
    # "==": lhs must equal rhs; "!=": lhs must differ from rhs;
    # "==@2": equal at a = 2 and different everywhere else
    relation: str = "=="

    def holds(self, lhs: object, rhs: object, a: int) -> bool:
        if self.relation == "==@2":
            return (lhs == rhs) == (a == 2)
        return lhs == rhs if self.relation == "==" else lhs != rhs


@dataclass(frozen=True, slots=True)
class CheckResult:
    check: str
    a: int
    passed: bool
    lhs: str
    rhs: str
    message: str = ""

    def as_dict(self) -> dict[str, object]:
        return {"a": str(self.a), "lhs": self.lhs, "rhs": self.rhs, "passed": self.passed, "message": self.message}


@dataclass(frozen=True)
class VerificationReport:
    range: tuple[int, int]
    checks: tuple[str, ...]
    results: tuple[CheckResult, ...]
    pass_counts: dict[str, int]
    elapsed: float = field(compare=False)

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(r for r in self.results if not r.passed)

    @property
    def all_passed(self) -> bool:
        return not self.failures

    @property
    def passing_checks(self) -> int:
        return sum(1 for name in self.checks if not any(f.check == name for f in self.failures))

    def summary(self) -> str:
        n_fail = len(self.failures)
        return f"{self.passing_checks}/{len(self.checks)} checks, {n_fail} failure{'s' if n_fail != 1 else ''}"

    def to_json_obj(self) -> dict[str, object]:
        by_check: dict[str, list[CheckResult]] = {name: [] for name in self.checks}
        for r in self.results:
            by_check[r.check].append(r)
        return {
            "range": [str(self.range[0]), str(self.range[1])],
            "checks": [
                {
                    "name": name,
                    "passes": self.pass_counts[name],
                    "failures": [
                        {"a": str(r.a), "lhs": r.lhs, "rhs": r.rhs, "message": r.message}
                        for r in rows
                        if not r.passed
                    ],
                    "results": [{"a": str(r.a), "lhs": r.lhs, "rhs": r.rhs, "passed": r.passed} for r in rows],
                }
                for name, rows in by_check.items()
            ],
            "all_passed": self.all_passed,
        }


# --------------------------------------------------------------------------
# the checks


def _lemma_rel(a: int) -> tuple[int, int]:
    return inv.genus_W(a) - inv.deg_gamma_sum(a), inv.exponent(a) * (2 * a + 1)


def _deg_gamma_oracle(a: int) -> tuple[int, int]:
    return inv.deg_gamma_sum(a), inv.deg_gamma_closed(a)


def _alpha_closed_form(a: int) -> tuple[int, int]:
    return inv.alpha(a), inv.alpha_closed(a)


def _degree_bookkeeping(a: int) -> tuple[int, int]:
    p = inv.curve_params(a)
    return inv.alpha(a) * p.deg_omega + inv.beta(a) * p.deg_L, inv.total_degree_m(a)


def _secant_degree(a: int) -> tuple[int, int]:
    return inv.secant_sum_class(a).degree, (2 * a - 4) * inv.deg_gamma_sum(a)


def _dim_z(a: int) -> tuple[str, str]:
    e, gw, dg = inv.exponent(a), inv.genus_W(a), inv.deg_gamma_sum(a)
    dz = inv.dim_Z(a)
    lhs = f"{decimal_str(dz)}; {decimal_str(dz * e)}"
    rhs = f"{decimal_str(gw - (2 * a + 1))}; {decimal_str((e - 1) * gw + dg)}"
    return lhs, rhs


def _contradiction_guard(a: int) -> tuple[int, int]:
    return (inv.exponent(a) - 2) * inv.genus_W(a), -2 * inv.deg_gamma_sum(a)


def _class_coefficient(a: int) -> tuple[Fraction, Fraction]:
    lhs = Fraction(1, factorial(a) * factorial(a + 1))
    rhs = Fraction(inv.exponent(a), factorial(2 * a))
    return lhs, rhs


def _catalan_recurrence(a: int) -> tuple[int, int]:
    return (a + 2) * inv.exponent(a + 1), 2 * (2 * a + 1) * inv.exponent(a)


def _rho_is_one(a: int) -> tuple[int, int]:
    return inv.rho(2 * a + 1, 1, a + 2), 1


def _quadratic_roots(a: int) -> tuple[str, str]:
    e = inv.exponent(a)
    poly = inv.norm_endo_poly(e)
    # roots recovered from the coefficients alone, via the discriminant
    c2, c1, c0 = poly.coefficients
    disc = c1 * c1 - 4 * c2 * c0
    s = isqrt(disc)
    d = decimal_str
    if s * s != disc:
        return f"discriminant {d(disc)} is not a square", f"roots 1, {d(1 - e)}"
    solved = sorted(as_integer(Fraction(-c1 + sign * s, 2 * c2)) for sign in (1, -1))
    values = [poly(r) for r in solved]
    lhs = f"roots {d(solved[1])}, {d(solved[0])}; values {d(values[1])}, {d(values[0])}"
    rhs = f"roots 1, {d(1 - e)}; values 0, 0"
    if sorted(poly.roots) != solved:
        lhs += f"; stored roots {d(poly.roots[0])}, {d(poly.roots[1])}"
    return lhs, rhs


_INVOLUTION = ("deg_gamma 1", "e 2", "gamma ω^1 L^-1", "genus_W 11", "dim_Z 6")


def _involution_specialization(a: int) -> tuple[str, str]:
    observed = (
        f"deg_gamma {decimal_str(inv.deg_gamma_sum(a))}",
        f"e {decimal_str(inv.exponent(a))}",
        f"gamma {inv.gamma_class(a)}",
        f"genus_W {decimal_str(inv.genus_W(a))}",
        f"dim_Z {decimal_str(inv.dim_Z(a))}",
    )
    return "; ".join(observed), "; ".join(_INVOLUTION)


CHECKS: dict[str, CheckSpec] = {
    spec.name: spec
    for spec in (
        CheckSpec("lemma-rel", "g(W) - deg gamma = e g", "Lemma rel", _lemma_rel),
        CheckSpec(
            "deg-gamma-oracle",
            "alternating Castelnuovo sum equals 1 + e(2a+1)(a-2)/(a+2)",
            "Lemma castel, Eq. (deg)",
            _deg_gamma_oracle,
        ),
        CheckSpec("alpha-closed-form", "alpha = e(a-1)/2 and is an integer", "Theorem sum", _alpha_closed_form),
        CheckSpec(
            "degree-bookkeeping",
            "alpha deg(omega) + beta deg(L) = m = (a+2) deg gamma",
            "Eq. (le), Eq. (tensor)",
            _degree_bookkeeping,
        ),
        CheckSpec(
            "secant-degree",
            "degree of the secant-sum class is (2a-4) deg gamma",
            "Theorem sum, genus-9 example",
            _secant_degree,
        ),
        CheckSpec(
            "dim-z",
            "dim Z = g(W) - g and e dim Z = (e-1) g(W) + deg gamma",
            "Theorem prym",
            _dim_z,
        ),
        CheckSpec(
            "contradiction-guard",
            "(e-2) g(W) differs from -2 deg gamma",
            "Theorem prym",
            _contradiction_guard,
            relation="!=",
        ),
        CheckSpec("class-coefficient", "1/(a!(a+1)!) = e/(2a)!", "Eq. (classBN)", _class_coefficient),
        CheckSpec("catalan-recurrence", "(a+2) e(a+1) = 2(2a+1) e(a)", "Eq. (exp)", _catalan_recurrence),
        CheckSpec("rho-is-one", "rho(2a+1, 1, a+2) = 1", "Section 2", _rho_is_one),
        CheckSpec(
            "quadratic-roots",
            "x^2 + (e-2)x - (e-1) has roots exactly 1 and 1-e",
            "Eq. (eq)",
            _quadratic_roots,
        ),
        CheckSpec(
            "involution-specialization",
            "the genus-5 involution picture holds at a = 2 and only there",
            "Section 1",
            _involution_specialization,
            relation="==@2",
        ),
    )
}


def check_names() -> list[str]:
    return list(CHECKS)


def _render(value: object) -> str:
    if isinstance(value, (int, Fraction)):
        return decimal_str(value)
    return str(value)


def _evaluate(spec: CheckSpec, a: int) -> CheckResult:
    try:
        lhs, rhs = spec.evaluate(a)
    except (NonIntegralResult, ZeroDivisionError, inv.InternalInconsistency) as exc:
        return CheckResult(spec.name, a, False, "error", "error", f"{type(exc).__name__}: {exc}")
    passed = spec.holds(lhs, rhs, a)
    lhs_s, rhs_s = _render(lhs), _render(rhs)
    message = ""
    if not passed:
        op = "==" if lhs == rhs else "!="
        message = f"{spec.name} at a={a}: {lhs_s} {op} {rhs_s} ({spec.description})"
    return CheckResult(spec.name, a, passed, lhs_s, rhs_s, message)


def _evaluate_block(names: Sequence[str], values: Sequence[int]) -> list[CheckResult]:
    return [_evaluate(CHECKS[name], a) for a in values for name in names]


def run_checks(
    a_min: int,
    a_max: int,
    selected: Sequence[str] | None = None,
    workers: int | None = None,
) -> VerificationReport:
    """Evaluate the selected checks (default: all) at every ``a`` in ``[a_min, a_max]``.

    Failures are collected rather than raised.  With ``workers > 1`` the
    range is split across processes; the report is the same either way.
    """
    if selected:
        unknown = [name for name in selected if name not in CHECKS]
        if unknown:
            raise UnknownCheckName(unknown)
        names = [name for name in CHECKS if name in set(selected)]
    else:
        names = list(CHECKS)
    if a_min < 2 or a_max < a_min:
        raise ValueError(f"need 2 ≤ a_min ≤ a_max, got a_min={a_min}, a_max={a_max}")

    start = time.perf_counter()
    values = range(a_min, a_max + 1)
    if workers and workers > 1 and len(values) > 1:
        chunks = [list(values[i::workers]) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = pool.map(_evaluate_block, [names] * len(chunks), chunks)
            results = [r for block in blocks for r in block]
    else:
        results = _evaluate_block(names, values)
    order = {name: i for i, name in enumerate(names)}
    results.sort(key=lambda r: (order[r.check], r.a))
    counts = {name: 0 for name in names}
    for r in results:
        counts[r.check] += r.passed
    return VerificationReport(
        range=(a_min, a_max),
        checks=tuple(names),
        results=tuple(results),
        pass_counts=counts,
        elapsed=time.perf_counter() - start,
    )


# --------------------------------------------------------------------------
# worked examples


class ExampleRow(NamedTuple):
    label: str
    computed: str
    expected: str
    match: bool


# values as stated for the genus-7 and genus-9 curves
EXAMPLES: dict[str, tuple[int, dict[str, str]]] = {
    "genus7": (
        3,
        {
            "exponent": "5",
            "deg_gamma": "8",
            "alpha": "5",
            "beta": "-4",
            "m": "40",
            "secant_sum": "M^4 ω^-1",
        },
    ),
    "genus9": (
        4,
        {
            "exponent": "14",
            "genus_W": "169",
            "deg_gamma": "43",
            "alpha": "21",
            "beta": "-13",
            "secant_sum": "M^30 ω^-8",
        },
    ),
}


def _example_value(label: str, a: int) -> str:
    getters: dict[str, Callable[[int], object]] = {
        "exponent": inv.exponent,
        "genus_W": inv.genus_W,
        "deg_gamma": inv.deg_gamma_sum,
        "alpha": inv.alpha,
        "beta": inv.beta,
        "m": inv.total_degree_m,
        "secant_sum": inv.secant_sum_class,
    }
    return _render(getters[label](a))


def reproduce_example(name: str) -> list[ExampleRow]:
    try:
        a, expected = EXAMPLES[name]
    except KeyError:
        raise UnknownExampleName(name) from None
    rows = []
    for label, want in expected.items():
        try:
            got = _example_value(label, a)
        except NonIntegralResult as exc:
            got = f"error: {exc}"
        rows.append(ExampleRow(label, got, want, got == want))
    return rows


# --------------------------------------------------------------------------
# mutation hooks


def _beta_plus_one(a: int) -> int:
    return 2 - inv.exponent(a)


def _deg_gamma_no_prefactor(a: int) -> int:
    return sum(inv.deg_gamma_terms(a))


def _genus_double_factorial(a: int) -> int:
    g = 2 * a + 1
    value = Fraction(a, a + 2) * Fraction(2 * factorial(2 * g), factorial(a) * factorial(a + 1)) + 1
    return as_integer(value)


MUTATIONS: dict[str, tuple[str, Callable[[int], int]]] = {
    "beta-two-minus-e": ("beta", _beta_plus_one),
    "deg-gamma-no-prefactor": ("deg_gamma_sum", _deg_gamma_no_prefactor),
    "genus-2g-factorial": ("genus_W", _genus_double_factorial),
}


@contextlib.contextmanager
def mutated(name: str) -> Iterator[None]:
    """Temporarily replace one formula in :mod:`bncalc.invariants` with a seeded bug.

    Not thread-safe; intended for single-process suite runs.
    """
    attr, replacement = MUTATIONS[name]
    original = getattr(inv, attr)
    setattr(inv, attr, replacement)
    try:
        yield
    finally:
        setattr(inv, attr, original)

