import random

import pytest
from hypothesis import given, strategies as st

from oracles import sdet, smat
from strategies import gaussian_rationals
from torusbundle.classify import random_subspace
from torusbundle.errors import DegenerateStructureError, DimensionError, MalformedStructureError
from torusbundle.matrix import ExactMatrix
from torusbundle.scalars import I, ONE, ZERO, gr, parse_scalar
from torusbundle.structures import project_V, project_Vbar, validate_subspace


def columns(*cols):
    return ExactMatrix.from_columns([[parse_scalar(x) for x in c] for c in cols])


STANDARD = columns(["1", "0", "i", "0"], ["0", "1", "0", "i"])


def test_standard_structure():
    V = validate_subspace(STANDARD)
    assert V.orientation == gr(4)
    assert V.orientation_sign == 1
    assert sdet(smat(V.frame.P)) == -4
    assert project_V(V, [1, 0, 0, 0]) == [gr(1, 0) / 2, ZERO]


def test_elliptic_curve():
    E = validate_subspace(columns(["1", "i"]))
    assert E.dim == 1 and E.ambient_rank == 2
    assert E.orientation == gr(2)


def test_degenerate_and_malformed():
    with pytest.raises(DegenerateStructureError):
        validate_subspace(columns(["1", "0", "2", "0"], ["0", "1", "0", "3"]))
    with pytest.raises(MalformedStructureError):
        validate_subspace(columns(["1", "i", "0", "0"], ["2", "2*i", "0", "0"]))
    with pytest.raises(MalformedStructureError):
        validate_subspace(columns(["1", "i", "0"]))
    with pytest.raises(DimensionError):
        validate_subspace(STANDARD, expected_dim=1)


def test_projections():
    V = validate_subspace(STANDARD)
    first = V.vectors()[0]
    assert project_V(V, first) == [ONE, ZERO]
    assert project_V(V, [x.conj() for x in first]) == [ZERO, ZERO]
    with pytest.raises(DimensionError):
        project_V(V, [1, 2])
    with pytest.raises(DimensionError):
        project_Vbar(V, [1, 2, 3])


def test_frame_identities():
    V = validate_subspace(STANDARD)
    assert V.frame.P @ V.frame.P_inverse == ExactMatrix.identity(4)
    assert V.frame.P_inverse @ V.frame.P == ExactMatrix.identity(4)


@given(st.integers(1, 3), st.integers(0, 10**6).map(random.Random), st.data())
def test_real_vectors_split_into_conjugate_halves(n, rng, data):
    V = random_subspace(n, rng)
    assert V.orientation.is_real() and not V.orientation.is_zero()
    x = [data.draw(gaussian_rationals()).re for _ in range(2 * n)]
    v, vbar = V.coordinates(x)
    assert vbar == [t.conj() for t in v]
    w = V.basis.apply(v)
    assert [a + a.conj() for a in w] == [gr(t) for t in x]
    assert V.frame.combine(v, vbar) == [gr(t) for t in x]
