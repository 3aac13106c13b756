"""Integral alternating forms ``A : Gamma x Gamma -> Lambda``.

``Gamma = Z^{2m}`` and ``Lambda = Z^{2d}`` come with fixed bases; ``A`` is
stored as ``2d`` alternating integer matrices ``A_k`` of size ``2m x 2m`` with

    A(g, g') = sum_k (g^T A_k g') * lambda_k.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DimensionError, MalformedFormError, UnsupportedSizeError
from .matrix import ExactMatrix, kernel_basis, rank
from .poly import Polynomial
from .scalars import GaussianRational, ZERO

__all__ = [
    "AlternatingLatticeForm",
    "TriangularSplitting",
    "PfaffianPencilReport",
    "validate_form",
    "kernel_of_form",
    "image_dimension",
    "triangular_splitting",
    "pfaffian_pencil",
    "pfaffian4",
    "form_from_complex_bilinear",
    "change_gamma_basis",
    "change_lambda_basis",
]

PENCIL_NAMES = ("mu1", "mu2")


def _as_int(value, where):
    if isinstance(value, bool):
        raise MalformedFormError(f"{where}: boolean entry")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    if isinstance(value, GaussianRational) and value.is_real() and value.re.denominator == 1:
        return int(value.re)
    raise MalformedFormError(f"{where}: entry {value!r} is not an integer")


@dataclass(frozen=True)
class AlternatingLatticeForm:
    m: int
    d: int
    components: tuple

    def __post_init__(self):
        comps = tuple(
            tuple(tuple(_as_int(x, f"A_{k + 1}[{i + 1}][{j + 1}]") for j, x in enumerate(row))
                  for i, row in enumerate(mat))
            for k, mat in enumerate(self.components)
        )
        object.__setattr__(self, "components", comps)

    @property
    def rank_gamma(self):
        return 2 * self.m

    @property
    def rank_lambda(self):
        return 2 * self.d

    def matrix(self, k):
        return ExactMatrix(self.components[k])

    def matrices(self):
        return [self.matrix(k) for k in range(len(self.components))]

    def value(self, x, y):
        """Lambda-coordinates of ``A(x, y)``; ``x``, ``y`` may be complex."""
        x = [GaussianRational.coerce(t) for t in x]
        y = [GaussianRational.coerce(t) for t in y]
        out = []
        for comp in self.components:
            acc = ZERO
            for i, row in enumerate(comp):
                if not x[i]:
                    continue
                inner = ZERO
                for j, a in enumerate(row):
                    if a and y[j]:
                        inner = inner + a * y[j]
                acc = acc + x[i] * inner
            out.append(acc)
        return out

    def is_zero(self):
        return all(x == 0 for comp in self.components for row in comp for x in row)

    def to_json(self):
        return {"m": self.m, "d": self.d, "components": [[list(r) for r in c] for c in self.components]}

    @classmethod
    def zero(cls, m, d):
        n = 2 * m
        return cls(m, d, tuple(tuple((0,) * n for _ in range(n)) for _ in range(2 * d)))


def validate_form(form):
    """Check sizes and the alternating property; returns the form unchanged."""
    if form.m < 1 or form.d < 1:
        raise MalformedFormError(f"dimensions must be positive, got m={form.m}, d={form.d}")
    if len(form.components) != 2 * form.d:
        raise MalformedFormError(
            f"expected 2d = {2 * form.d} component matrices, got {len(form.components)}"
        )
    n = 2 * form.m
    for k, comp in enumerate(form.components):
        if len(comp) != n or any(len(row) != n for row in comp):
            raise MalformedFormError(f"component A_{k + 1} is not {n}x{n}")
        for i in range(n):
            if comp[i][i] != 0:
                raise MalformedFormError(f"A_{k + 1} has nonzero diagonal entry at ({i + 1},{i + 1})")
            for j in range(i + 1, n):
                if comp[i][j] != -comp[j][i]:
                    raise MalformedFormError(
                        f"A_{k + 1} is not alternating at ({i + 1},{j + 1})"
                    )
    return form


def stacked_matrix(form):
    """The ``(2d*2m) x 2m`` matrix ``[A_1; ...; A_{2d}]``."""
    rows = [list(row) for comp in form.components for row in comp]
    return ExactMatrix(rows, cols=2 * form.m)


def kernel_of_form(form):
    """``(dimension, basis)`` of ``{x in Gamma (x) Q : A(x, .) = 0}``."""
    basis = kernel_basis(stacked_matrix(form))
    return len(basis), basis


def image_dimension(form):
    """Dimension of the span of all values ``A(g_i, g_j)`` in ``Lambda (x) Q``."""
    pairs = list(combinations(range(2 * form.m), 2))
    if not pairs:
        return 0
    values = ExactMatrix([[comp[i][j] for i, j in pairs] for comp in form.components], cols=len(pairs))
    return rank(values)


@dataclass(frozen=True)
class TriangularSplitting:
    """``A_k = Tminus_k - Tminus_k^T`` with ``Tminus_k`` strictly lower triangular,
    and ``S_k = -(Tminus_k + Tminus_k^T) / 4``."""

    Tminus: tuple
    S: tuple

    def tminus_matrix(self, k):
        return ExactMatrix(self.Tminus[k])

    def s_matrix(self, k):
        return ExactMatrix(self.S[k])

    def tminus_value(self, x, y):
        return _bilinear_values(self.Tminus, x, y)

    def s_value(self, x, y):
        return _bilinear_values(self.S, x, y)


def _bilinear_values(mats, x, y):
    out = []
    for mat in mats:
        acc = ZERO
        for i, row in enumerate(mat):
            xi = GaussianRational.coerce(x[i])
            if not xi:
                continue
            for j, a in enumerate(row):
                if a:
                    acc = acc + xi * a * GaussianRational.coerce(y[j])
        out.append(acc)
    return out


def triangular_splitting(form):
    n = 2 * form.m
    tminus = []
    s = []
    for comp in form.components:
        t = tuple(tuple(comp[i][j] if i > j else 0 for j in range(n)) for i in range(n))
        sym = tuple(tuple(Fraction(-(t[i][j] + t[j][i]), 4) for j in range(n)) for i in range(n))
        for i in range(n):
            for j in range(n):
                if t[i][j] - t[j][i] != comp[i][j]:
                    raise AssertionError("triangular splitting does not reassemble A")
                # T- + 2S = A/2
                if t[i][j] + 2 * sym[i][j] != Fraction(comp[i][j], 2):
                    raise AssertionError("T- + 2S != A/2")
        tminus.append(t)
        s.append(sym)
    return TriangularSplitting(tuple(tminus), tuple(s))


def pfaffian4(mat):
    """Pfaffian of a 4x4 alternating matrix given as nested lists (any ring)."""
    return mat[0][1] * mat[2][3] - mat[0][2] * mat[1][3] + mat[0][3] * mat[1][2]


@dataclass(frozen=True)
class PfaffianPencilReport:
    """Pfaffian of the pencil ``mu1*A_1 + mu2*A_2`` and where it vanishes.

    ``pf_coefficients`` is the form up to the sign fixed by the ordering of
    the Gamma basis, normalised so its leading coefficient is positive;
    ``pf_signed`` keeps the sign given by the basis ordering.
    """

    pf_coefficients: dict
    pf_signed: dict
    discriminant: Fraction
    real_point_verdict: str

    def polynomial(self, signed=False):
        coeffs = self.pf_signed if signed else self.pf_coefficients
        terms = {}
        for key, value in coeffs.items():
            a, b = (int(t) for t in key.split(","))
            terms[(a, b)] = GaussianRational.coerce(value)
        return Polynomial(2, terms, PENCIL_NAMES)

    def to_json(self):
        return {
            "pf_coefficients": dict(self.pf_coefficients),
            "pf_signed": dict(self.pf_signed),
            "pf_form": str(self.polynomial()),
            "discriminant": str(self.discriminant),
            "real_point_verdict": self.real_point_verdict,
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            pf_coefficients=dict(data["pf_coefficients"]),
            pf_signed=dict(data["pf_signed"]),
            discriminant=Fraction(data["discriminant"]),
            real_point_verdict=data["real_point_verdict"],
        )


REAL_POINT = "real-point"
CONJUGATE_ONLY = "complex-conjugate-points-only"
IDENTICALLY_ZERO = "identically-zero"
UNDECIDED = "undecided"


def _coeff_dict(a, b, c):
    return {"2,0": str(a), "1,1": str(b), "0,2": str(c)}


def pfaffian_pencil(form):
    """Expand ``Pf(mu1 A_1 + mu2 A_2)`` for ``m = 2, d = 1`` and classify its real zeros."""
    if (form.m, form.d) != (2, 1):
        raise UnsupportedSizeError(
            f"Pfaffian pencil analysis needs m=2, d=1 (got m={form.m}, d={form.d})"
        )
    A1, A2 = form.components
    mu1 = Polynomial.variable(2, 0, PENCIL_NAMES)
    mu2 = Polynomial.variable(2, 1, PENCIL_NAMES)
    pencil = [[mu1 * A1[i][j] + mu2 * A2[i][j] for j in range(4)] for i in range(4)]
    pf = pfaffian4(pencil)
    a = pf.coefficient((2, 0)).to_rational()
    b = pf.coefficient((1, 1)).to_rational()
    c = pf.coefficient((0, 2)).to_rational()
    signed = _coeff_dict(a, b, c)
    lead = next((t for t in (a, b, c) if t != 0), 0)
    if lead < 0:
        a, b, c = -a, -b, -c
    disc = b * b - 4 * a * c
    if a == b == c == 0:
        verdict = IDENTICALLY_ZERO
    elif disc >= 0:
        verdict = REAL_POINT
    else:
        verdict = CONJUGATE_ONLY
    return PfaffianPencilReport(
        pf_coefficients=_coeff_dict(a, b, c),
        pf_signed=signed,
        discriminant=disc,
        real_point_verdict=verdict,
    )


def form_from_complex_bilinear(coeffs):
    """Integral form on ``Z[i]^m`` with values in ``Z[i]`` from an alternating
    complex matrix ``C`` (Gaussian-integer entries):

        A(z, z') = sum_{a,b} C[a][b] z_a z'_b,

    in the bases ``(1,0,..), (i,0,..), (0,1,..), ...`` of ``Gamma`` and
    ``(1, i)`` of ``Lambda``.
    """
    m = len(coeffs)
    C = [[GaussianRational.coerce(x) for x in row] for row in coeffs]
    for a in range(m):
        for b in range(m):
            if C[a][b] != -C[b][a]:
                raise MalformedFormError("complex coefficient matrix is not alternating")
    units = [GaussianRational(1), GaussianRational(0, 1)]
    n = 2 * m
    re_part = [[0] * n for _ in range(n)]
    im_part = [[0] * n for _ in range(n)]
    for a in range(m):
        for s in range(2):
            for b in range(m):
                for t in range(2):
                    value = C[a][b] * units[s] * units[t]
                    if value.re.denominator != 1 or value.im.denominator != 1:
                        raise MalformedFormError("coefficients must be Gaussian integers")
                    re_part[2 * a + s][2 * b + t] = int(value.re)
                    im_part[2 * a + s][2 * b + t] = int(value.im)
    return AlternatingLatticeForm(m, 1, (tuple(map(tuple, re_part)), tuple(map(tuple, im_part))))


def change_gamma_basis(form, g):
    """Components ``g^T A_k g`` for an integer matrix ``g`` (new basis in the columns)."""
    G = ExactMatrix(g)
    comps = []
    for mat in form.matrices():
        new = G.T @ mat @ G
        comps.append(tuple(tuple(_as_int(x, "basis change") for x in row) for row in new.tolist()))
    return AlternatingLatticeForm(form.m, form.d, tuple(comps))


def change_lambda_basis(form, h):
    """Replace components by ``A'_k = sum_l h[k][l] A_l`` for an integer matrix ``h``."""
    n = 2 * form.m
    size = 2 * form.d
    if len(h) != size or any(len(row) != size for row in h):
        raise DimensionError(f"Lambda basis change must be {size}x{size}")
    comps = []
    for k in range(size):
        comps.append(tuple(
            tuple(sum(h[k][l] * form.components[l][i][j] for l in range(size)) for j in range(n))
            for i in range(n)
        ))
    return AlternatingLatticeForm(form.m, form.d, tuple(comps))
