"""Hypothesis strategies for exact scalars, matrices and forms."""

from hypothesis import strategies as st

from torusbundle.lattice import AlternatingLatticeForm
from torusbundle.matrix import ExactMatrix
from torusbundle.scalars import GaussianRational

small_ints = st.integers(min_value=-5, max_value=5)
rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@st.composite
def gaussian_rationals(draw, parts=rationals):
    return GaussianRational(draw(parts), draw(parts))


@st.composite
def gaussian_integers(draw, bound=3):
    part = st.integers(min_value=-bound, max_value=bound)
    return GaussianRational(draw(part), draw(part))


@st.composite
def matrices(draw, rows=None, cols=None, entries=None, max_size=4):
    rows = rows if rows is not None else draw(st.integers(1, max_size))
    cols = cols if cols is not None else draw(st.integers(1, max_size))
    entries = entries if entries is not None else gaussian_integers()
    return ExactMatrix([[draw(entries) for _ in range(cols)] for _ in range(rows)])


@st.composite
def alternating_forms(draw, m=2, d=1, bound=2, nonzero=False):
    n = 2 * m
    comps = []
    for _ in range(2 * d):
        mat = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                value = draw(st.integers(-bound, bound))
                mat[i][j] = value
                mat[j][i] = -value
        comps.append(mat)
    form = AlternatingLatticeForm(m, d, comps)
    if nonzero and form.is_zero():
        comps[0][0][1], comps[0][1][0] = 1, -1
        form = AlternatingLatticeForm(m, d, comps)
    return form


@st.composite
def unimodular(draw, n, steps=6):
    """Product of random elementary integer matrices and sign flips."""
    mat = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, n - 1))
        if i == j:
            mat = [[-x for x in row] if r == i else row for r, row in enumerate(mat)]
            continue
        c = draw(st.integers(-2, 2))
        mat[i] = [a + c * b for a, b in zip(mat[i], mat[j])]
    return mat
