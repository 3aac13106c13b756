import sympy as sp
from hypothesis import given, strategies as st

from torusbundle.matrix import ExactMatrix, determinant
from torusbundle.poly import Polynomial, poly_determinant
from torusbundle.scalars import gr

from strategies import matrices

NAMES = ("mu1", "mu2")


def test_str_and_terms():
    mu1 = Polynomial.variable(2, 0, NAMES)
    mu2 = Polynomial.variable(2, 1, NAMES)
    p = mu1 * mu1 + mu2 * mu2
    assert str(p) == "mu1^2 + mu2^2"
    assert str(mu1 * mu2) == "mu1*mu2"
    assert p.degree() == 2 and p.is_homogeneous()
    assert p.has_real_coefficients()
    assert (p - p).is_zero()
    assert p.evaluate([gr(3), gr(4)]) == gr(25)


def test_json_round_trip():
    mu1 = Polynomial.variable(2, 0, NAMES)
    p = mu1 * gr(1, 2) - Polynomial.constant(2, gr(3), NAMES)
    assert Polynomial.from_json(2, p.to_json(), NAMES) == p


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(matrices(n, n), matrices(n, n))),
       st.integers(-3, 3), st.integers(-3, 3))
def test_poly_determinant_matches_evaluation(pair, a, b):
    M1, M2 = pair
    n = M1.rows
    grid = [[Polynomial.linear([M1[i, j], M2[i, j]], NAMES) for j in range(n)] for i in range(n)]
    det = poly_determinant(grid)
    at_point = determinant(M1.scale(gr(a)) + M2.scale(gr(b)))
    assert det.evaluate([gr(a), gr(b)]) == at_point
