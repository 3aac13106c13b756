from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from oracles import pfaffian_oracle, smat, srank
from strategies import alternating_forms, unimodular
from torusbundle.errors import MalformedFormError, UnsupportedSizeError
from torusbundle.lattice import (
    CONJUGATE_ONLY,
    IDENTICALLY_ZERO,
    REAL_POINT,
    AlternatingLatticeForm,
    PfaffianPencilReport,
    change_gamma_basis,
    change_lambda_basis,
    form_from_complex_bilinear,
    image_dimension,
    kernel_of_form,
    pfaffian_pencil,
    triangular_splitting,
    validate_form,
)
from torusbundle.scalars import gr


def e(n, i, j):
    mat = [[0] * n for _ in range(n)]
    mat[i][j], mat[j][i] = 1, -1
    return mat


SPLIT = AlternatingLatticeForm(2, 1, (e(4, 0, 1), e(4, 2, 3)))
BLOCK = AlternatingLatticeForm(2, 1, (
    [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]],
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]],
))


def test_iwasawa_components(iwasawa):
    A = iwasawa.A
    assert A.components[0] == ((0, 0, 1, 0), (0, 0, 0, -1), (-1, 0, 0, 0), (0, 1, 0, 0))
    assert A.components[1] == ((0, 0, 0, 1), (0, 0, 1, 0), (0, -1, 0, 0), (-1, 0, 0, 0))
    g = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    assert A.value(g[0], g[2]) == [gr(1), gr(0)]
    assert A.value(g[1], g[3]) == [gr(-1), gr(0)]
    assert A.value(g[0], g[1]) == [gr(0), gr(0)]


def test_validate():
    validate_form(AlternatingLatticeForm.zero(2, 1))
    with pytest.raises(MalformedFormError):
        validate_form(AlternatingLatticeForm(2, 1, ([[int(i == j) for j in range(4)] for i in range(4)], e(4, 0, 1))))
    with pytest.raises(MalformedFormError):
        validate_form(AlternatingLatticeForm(2, 1, (e(4, 0, 1),)))
    sym = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    with pytest.raises(MalformedFormError):
        validate_form(AlternatingLatticeForm(2, 1, (sym, e(4, 0, 1))))
    with pytest.raises(MalformedFormError):
        AlternatingLatticeForm(1, 1, ([[0, Fraction(1, 2)], [Fraction(-1, 2), 0]], [[0, 0], [0, 0]]))


def test_kernel_and_image(iwasawa):
    assert kernel_of_form(AlternatingLatticeForm.zero(2, 1))[0] == 4
    assert kernel_of_form(iwasawa.A)[0] == 0
    assert kernel_of_form(SPLIT)[0] == 0
    assert image_dimension(AlternatingLatticeForm.zero(2, 1)) == 0
    assert image_dimension(iwasawa.A) == 2
    half = AlternatingLatticeForm(2, 1, (e(4, 0, 1), [[0] * 4] * 4))
    assert image_dimension(half) == 1


def test_triangular_splitting_iwasawa(iwasawa):
    split = triangular_splitting(iwasawa.A)
    t = split.Tminus[0]
    nonzero = {(i, j): t[i][j] for i in range(4) for j in range(4) if t[i][j]}
    assert nonzero == {(2, 0): -1, (3, 1): 1}
    for k, comp in enumerate(iwasawa.A.components):
        for i in range(4):
            for j in range(4):
                assert split.Tminus[k][i][j] - split.Tminus[k][j][i] == comp[i][j]
                assert split.S[k][i][j] == split.S[k][j][i]


@given(st.integers(1, 3).flatmap(lambda m: alternating_forms(m=m, d=1)))
def test_splitting_identities(form):
    split = triangular_splitting(form)
    n = 2 * form.m
    for k, comp in enumerate(form.components):
        for i in range(n):
            for j in range(n):
                assert split.Tminus[k][i][j] + 2 * split.S[k][i][j] == Fraction(comp[i][j], 2)
    for gamma in [(1,) + (0,) * (n - 1), tuple(range(-1, n - 1)), tuple(2 - i for i in range(n))]:
        assert all((2 * s).denominator == 1 for s in (v.to_rational() for v in split.s_value(gamma, gamma)))


def test_pencil_examples(iwasawa):
    report = pfaffian_pencil(iwasawa.A)
    assert str(report.polynomial()) == "mu1^2 + mu2^2"
    assert report.real_point_verdict == CONJUGATE_ONLY
    block = pfaffian_pencil(BLOCK)
    assert str(block.polynomial()) == "mu1^2 + mu2^2"
    assert block.pf_signed == {"2,0": "-1", "1,1": "0", "0,2": "-1"}
    split = pfaffian_pencil(SPLIT)
    assert str(split.polynomial()) == "mu1*mu2"
    assert split.real_point_verdict == REAL_POINT
    assert split.discriminant == 1
    zero = pfaffian_pencil(AlternatingLatticeForm.zero(2, 1))
    assert zero.real_point_verdict == IDENTICALLY_ZERO


def test_pencil_json_round_trip(iwasawa):
    report = pfaffian_pencil(iwasawa.A)
    assert PfaffianPencilReport.from_json(report.to_json()) == report


def test_pencil_unsupported():
    with pytest.raises(UnsupportedSizeError):
        pfaffian_pencil(AlternatingLatticeForm.zero(3, 1))
    with pytest.raises(UnsupportedSizeError):
        pfaffian_pencil(AlternatingLatticeForm.zero(2, 2))


@given(alternating_forms())
def test_pfaffian_against_oracles(form):
    report = pfaffian_pencil(form)
    signed = report.polynomial(signed=True)
    oracle, (mu1, mu2) = pfaffian_oracle(*form.components)
    for (a, b), coeff in [((2, 0), mu1**2), ((1, 1), mu1 * mu2), ((0, 2), mu2**2)]:
        assert sp.Rational(str(signed.coefficient((a, b)))) == oracle.as_expr().coeff(mu1, a).coeff(mu2, b)
    # Pf^2 = det at sample points
    A1, A2 = (sp.Matrix(c) for c in form.components)
    for point in [(1, 0), (0, 1), (1, 1), (2, -3), (-1, 4), (5, 2)]:
        det = (point[0] * A1 + point[1] * A2).det()
        assert signed.evaluate([gr(point[0]), gr(point[1])]).to_rational() ** 2 == det
    # verdict from the real roots of the oracle polynomial
    expr = oracle.as_expr()
    if expr == 0:
        assert report.real_point_verdict == IDENTICALLY_ZERO
    else:
        real_zero = bool(sp.Poly(expr.subs(mu2, 1), mu1).real_roots()) or expr.subs(mu1, 1).subs(mu2, 0) == 0
        assert (report.real_point_verdict == REAL_POINT) == real_zero


@given(alternating_forms(bound=3), unimodular(4))
def test_kernel_invariant_under_gamma_change(form, g):
    assert kernel_of_form(change_gamma_basis(form, g))[0] == kernel_of_form(form)[0]
    assert image_dimension(change_gamma_basis(form, g)) == image_dimension(form)


@given(alternating_forms(bound=3), unimodular(2))
def test_image_invariant_under_lambda_change(form, h):
    changed = change_lambda_basis(form, h)
    assert image_dimension(changed) == image_dimension(form)
    assert pfaffian_pencil(changed).real_point_verdict == pfaffian_pencil(form).real_point_verdict


def test_kernel_matches_oracle(iwasawa):
    stacked = sp.Matrix([row for comp in iwasawa.A.components for row in comp])
    assert 4 - stacked.rank() == kernel_of_form(iwasawa.A)[0]


def test_complex_bilinear_requires_alternating():
    with pytest.raises(MalformedFormError):
        form_from_complex_bilinear([[1, 0], [0, 0]])
