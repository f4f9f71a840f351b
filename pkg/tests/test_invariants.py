from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bncalc import invariants as inv
from bncalc.exactmath import NonIntegralResult, factorial
from oracles import castelnuovo_term_by_term, catalan_by_recurrence

CATALAN = catalan_by_recurrence(1001)
SWEEP = range(2, 201)


# --------------------------------------------------------------------------
# single-value examples


@pytest.mark.parametrize("g, r, d, expected", [(5, 1, 4, 1), (4, 1, 3, 0)])
def test_rho_examples(g, r, d, expected):
    assert inv.rho(g, r, d) == expected


@pytest.mark.parametrize("a, expected", [(3, 5), (4, 14), (2, 2)])
def test_exponent_examples(a, expected):
    assert inv.exponent(a) == expected


def test_exponent_two_by_hand():
    assert Fraction(factorial(4), factorial(2) * factorial(3)) == 2


def test_exponent_is_catalan():
    for a in range(1, 301):
        assert inv.exponent(a) == CATALAN[a]


@pytest.mark.parametrize("a, expected", [(2, 11), (4, 169), (3, 43)])
def test_genus_W_examples(a, expected):
    assert inv.genus_W(a) == expected


def test_genus_W_three_from_lemma_rel():
    assert 5 * 7 + 8 == 43


def test_genus_notation_reading():
    # 2g! as 2*(g!) reproduces 11 and 169; (2g)! does not
    def reading(a, numerator):
        return Fraction(a, a + 2) * Fraction(numerator, factorial(a) * factorial(a + 1)) + 1

    assert reading(2, 2 * factorial(5)) == 11
    assert reading(4, 2 * factorial(9)) == 169
    assert reading(2, factorial(10)) != 11
    assert reading(4, factorial(18)) != 169


@pytest.mark.parametrize("a, expected", [(3, 8), (4, 43), (5, 199), (2, 1)])
def test_deg_gamma_sum_examples(a, expected):
    assert inv.deg_gamma_sum(a) == expected


def test_deg_gamma_five_term_by_term():
    assert inv.deg_gamma_terms(5) == [2100, -840, 140, -7]
    assert castelnuovo_term_by_term(5) == Fraction(2100 - 840 + 140 - 7, 7) == 199


def test_deg_gamma_two_single_term():
    assert inv.deg_gamma_terms(2) == [4]
    assert castelnuovo_term_by_term(2) == 1 == 11 - 2 * 5


@pytest.mark.parametrize("a, expected", [(3, 8), (4, 43), (2, 1)])
def test_deg_gamma_closed_examples(a, expected):
    assert inv.deg_gamma_closed(a) == expected


@pytest.mark.parametrize("a, expected", [(3, 5), (4, 21), (2, 1)])
def test_alpha_examples(a, expected):
    assert inv.alpha(a) == expected


@pytest.mark.parametrize("a, expected", [(4, -13), (3, -4), (2, -1)])
def test_beta_examples(a, expected):
    assert inv.beta(a) == expected


@pytest.mark.parametrize("a, expected", [(3, 40), (4, 258), (2, 4)])
def test_total_degree_m_examples(a, expected):
    assert inv.total_degree_m(a) == expected


@pytest.mark.parametrize(
    "a, exps, degree",
    [(3, (5, -4), 40), (4, (21, -13), 258), (2, (1, -1), 4)],
)
def test_gamma_class_examples(a, exps, degree):
    cls = inv.gamma_class(a)
    assert [g.name for g in cls.basis] == ["ω", "L"]
    assert cls.exponents == exps
    assert cls.degree == degree


@pytest.mark.parametrize(
    "a, exps, degree, text",
    [(4, (30, -8), 172, "M^30 ω^-8"), (3, (4, -1), 16, "M^4 ω^-1"), (2, (0, 0), 0, "M^0 ω^0")],
)
def test_secant_sum_class_examples(a, exps, degree, text):
    cls = inv.secant_sum_class(a)
    assert [g.name for g in cls.basis] == ["M", "ω"]
    assert cls.exponents == exps
    assert cls.degree == degree
    assert str(cls) == text
    assert cls.render(unicode=False) == text.replace("ω", "omega")


def test_genus7_adjunction():
    # omega = M^4(-sum of node preimages): the 16 points have class M^4 omega^-1
    p = inv.curve_params(3)
    assert 4 * p.deg_M - p.deg_omega == 16 == 2 * 8


@pytest.mark.parametrize("a, expected", [(3, 36), (2, 6), (4, 160)])
def test_dim_Z_examples(a, expected):
    assert inv.dim_Z(a) == expected


def test_dim_Z_by_hand():
    assert (4 * 43 + 8) / 5 == 36
    assert (13 * 169 + 43) / 14 == 160 == 169 - 9


@pytest.mark.parametrize("a", [2, 3, 4])
def test_contradiction_guard_examples(a):
    assert inv.contradiction_guard(a) is True


@pytest.mark.parametrize("a", [2, 3, 10])
def test_class_coefficient_examples(a):
    assert inv.class_coefficient_identity(a) is True


def test_class_coefficient_by_hand():
    assert Fraction(1, 12) == Fraction(2, 24)
    assert Fraction(1, 144) == Fraction(5, 720)
    assert Fraction(1, factorial(10) * factorial(11)) == Fraction(16796, factorial(20))


@pytest.mark.parametrize(
    "e, coeffs, roots, text",
    [
        (2, (1, 0, -1), (1, -1), "x^2 - 1"),
        (5, (1, 3, -4), (1, -4), "x^2 + 3x - 4"),
        (14, (1, 12, -13), (1, -13), "x^2 + 12x - 13"),
    ],
)
def test_norm_endo_poly_examples(e, coeffs, roots, text):
    poly = inv.norm_endo_poly(e)
    assert poly.coefficients == coeffs
    assert poly.roots == roots
    assert str(poly) == text
    assert [poly(r) for r in roots] == [0, 0]
    assert poly.expanded_from_roots() == coeffs


def test_norm_endo_poly_factorisation():
    # (1 - e - x)(1 - x) expanded by hand
    for e in range(2, 50):
        poly = inv.norm_endo_poly(e)
        for x in range(-60, 60):
            assert poly(x) == (1 - e - x) * (1 - x)


def test_norm_endo_poly_rejects_small_e():
    with pytest.raises(ValueError):
        inv.norm_endo_poly(1)


@pytest.mark.parametrize(
    "a, expected",
    [
        (4, dict(g=9, genus_W=169, exponent=14, deg_gamma=43, alpha=21, beta=-13, m=258, dim_Z=160, rho=1)),
        (2, dict(g=5, genus_W=11, exponent=2, deg_gamma=1, alpha=1, beta=-1, m=4, dim_Z=6, rho=1)),
        (3, dict(g=7, genus_W=43, exponent=5, deg_gamma=8, alpha=5, beta=-4, m=40, dim_Z=36, rho=1)),
    ],
)
def test_full_invariants_examples(a, expected):
    row = inv.full_invariants(a).as_row()
    assert row == {"a": a, **expected}
    assert list(row) == list(inv.COLUMNS)


def test_curve_params():
    p = inv.curve_params(4)
    assert (p.g, p.deg_omega, p.deg_L, p.deg_M) == (9, 16, 6, 10)
    with pytest.raises(ValueError):
        inv.CurveParams(a=4, g=8, deg_omega=14, deg_L=6, deg_M=8)


@pytest.mark.parametrize("fn", [inv.genus_W, inv.deg_gamma_sum, inv.alpha, inv.beta, inv.full_invariants])
def test_preconditions(fn):
    with pytest.raises(ValueError, match="a must be ≥ 2"):
        fn(1)


def test_full_invariants_rejects_inconsistency(monkeypatch):
    monkeypatch.setattr(inv, "beta", lambda a: 2 - inv.exponent(a))
    with pytest.raises(inv.InternalInconsistency):
        inv.full_invariants(3)


def test_full_invariants_propagates_non_integral(monkeypatch):
    monkeypatch.setattr(inv, "deg_gamma_terms", lambda a: [1])
    with pytest.raises(NonIntegralResult):
        inv.full_invariants(3)


# --------------------------------------------------------------------------
# identities over a sweep


def test_lemma_rel_sweep():
    for a in SWEEP:
        assert inv.genus_W(a) - inv.deg_gamma_sum(a) == inv.exponent(a) * (2 * a + 1)


def test_alternating_sum_against_term_oracle():
    for a in range(2, 60):
        assert Fraction(inv.deg_gamma_sum(a)) == castelnuovo_term_by_term(a)


def test_alternating_sum_against_closed_form():
    for a in SWEEP:
        assert inv.deg_gamma_sum(a) == inv.deg_gamma_closed(a)


def test_alpha_closed_form_sweep():
    for a in SWEEP:
        assert inv.alpha(a) == inv.alpha_closed(a)
        assert (inv.exponent(a) * (a - 1)) % 2 == 0


def test_catalan_even_for_even_a():
    for a in range(2, 300, 2):
        assert inv.exponent(a) % 2 == 0


def test_degree_bookkeeping_sweep():
    for a in SWEEP:
        assert inv.gamma_class(a).degree == inv.alpha(a) * 4 * a + inv.beta(a) * (a + 2) == inv.total_degree_m(a)


def test_secant_sum_degree_sweep():
    for a in SWEEP:
        assert inv.secant_sum_class(a).degree == (2 * a - 4) * inv.deg_gamma_sum(a)


def test_secant_sum_closed_exponents():
    for a in SWEEP:
        e = inv.exponent(a)
        assert inv.secant_sum_class(a).exponents == (inv.deg_gamma_sum(a) - (e - 1), (e - 1) - inv.alpha(a))


def test_basis_change_preserves_degree():
    for a in range(2, 40):
        g = inv.gamma_class(a)
        assert inv.to_residual_basis(g, a).degree == g.degree


def test_dim_Z_sweep():
    for a in SWEEP:
        e, gw = inv.exponent(a), inv.genus_W(a)
        assert inv.dim_Z(a) == gw - (2 * a + 1)
        assert inv.dim_Z(a) * e == (e - 1) * gw + inv.deg_gamma_sum(a)


def test_guard_and_class_coefficient_sweep():
    for a in SWEEP:
        assert inv.contradiction_guard(a)
        assert inv.class_coefficient_identity(a)


def test_catalan_ratio_recurrence():
    for a in range(1, 500):
        assert (a + 2) * inv.exponent(a + 1) == 2 * (2 * a + 1) * inv.exponent(a)


def test_rho_is_one_sweep():
    for a in range(2, 1001):
        assert inv.rho(2 * a + 1, 1, a + 2) == 1


def test_involution_only_at_two():
    cls = inv.gamma_class(2)
    assert cls.exponents == (1, -1)
    for a in range(3, 40):
        assert inv.exponent(a) > 2
        assert inv.gamma_class(a).exponents != (1, -1)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=400))
def test_full_invariants_consistent(a):
    s = inv.full_invariants(a)
    assert s.inconsistencies() == []
    assert s.dim_P == s.params.g


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2))
def test_norm_quadratic_roots_property(e):
    poly = inv.norm_endo_poly(e)
    assert set(poly.roots) == {1, 1 - e}
    assert all(poly(r) == 0 for r in poly.roots)
