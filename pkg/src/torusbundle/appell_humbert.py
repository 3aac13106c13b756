"""Splitting of ``A`` along ``Gamma (x) C = V + conj(V)`` and ``Lambda (x) C = U + conj(U)``.

Write ``A = B + conj(B)`` with ``B`` the ``U``-valued part.  In the frame
``[V | conj V]`` each of the ``d`` coordinates ``B_j`` is a ``2m x 2m``
alternating matrix with blocks

    [[ B'_j        B''_j     ]
     [ -B''_j^T    obstr_j   ]]

where ``B'`` lives on ``V x V``, the mixed block ``B''`` on ``V x conj V``,
and ``obstr`` on ``conj V x conj V``.  The pair ``(V, U)`` satisfies the
Riemann relation exactly when every ``obstr_j`` vanishes.
"""

from dataclasses import dataclass

from .errors import DimensionError, PreconditionError
from .lattice import AlternatingLatticeForm
from .matrix import ExactMatrix, span_contains
from .poly import Polynomial, poly_determinant
from .scalars import I, ZERO
from .structures import PeriodSubspace

__all__ = [
    "BilinearDecomposition",
    "HermitianSystem",
    "decompose",
    "check_riemann",
    "bracket_closure_oracle",
    "hermitian_system",
    "discriminant_form",
    "cocycle",
]


@dataclass(frozen=True)
class BilinearDecomposition:
    form: AlternatingLatticeForm
    V: PeriodSubspace
    U: PeriodSubspace
    #: U-valued part of A in the frame [V | conj V], one 2m x 2m matrix per U-coordinate
    u_part: tuple
    #: conj(U)-valued part, same layout
    ubar_part: tuple

    @property
    def m(self):
        return self.form.m

    @property
    def d(self):
        return self.form.d

    def _block(self, mats, rows, cols):
        m = self.m
        r = slice(0, m) if rows == "V" else slice(m, 2 * m)
        c = slice(0, m) if cols == "V" else slice(m, 2 * m)
        return tuple(mat.submatrix(r, c) for mat in mats)

    @property
    def Bprime(self):
        """``B'_j[a][b] = B_j(v_a, v_b)``: the component in ``Lambda^2 V^* (x) U``."""
        return self._block(self.u_part, "V", "V")

    @property
    def Bdoubleprime(self):
        """``B''_j[a][b] = B_j(v_a, conj v_b)``: the Hermitian part."""
        return self._block(self.u_part, "V", "Vbar")

    @property
    def Bbar_VV(self):
        """Component of ``A`` in ``Lambda^2 conj(V)^* (x) U``; zero iff Riemann holds."""
        return self._block(self.u_part, "Vbar", "Vbar")

    def conjugate_blocks(self):
        """The conj(U)-valued blocks ``(conj B', conj B'', mixed-other, obstr-bar)``.

        ``conj B'`` sits on ``conj V x conj V`` and ``conj B''`` on ``conj V x V``.
        """
        return {
            "Bprime_bar": self._block(self.ubar_part, "Vbar", "Vbar"),
            "Bdoubleprime_bar": self._block(self.ubar_part, "Vbar", "V"),
            "obstruction_bar": self._block(self.ubar_part, "V", "V"),
        }

    # evaluation helpers, all in frame coordinates

    def bprime(self, v, w):
        return [_bilinear(mat, v, w) for mat in self.Bprime]

    def bdoubleprime(self, v, wbar):
        """``B''(v, wbar)`` for ``v`` in V-coordinates and ``wbar`` in conj(V)-coordinates."""
        return [_bilinear(mat, v, wbar) for mat in self.Bdoubleprime]

    def b_ambient(self, x, y):
        """U-coordinates of ``A(x, y)`` for ambient vectors ``x, y``."""
        cx = self.V.frame.P_inverse.apply(x)
        cy = self.V.frame.P_inverse.apply(y)
        return [_bilinear(mat, cx, cy) for mat in self.u_part]

    def is_parallelizable(self):
        return all(mat.is_zero() for mat in self.Bdoubleprime)

    def reassemble(self):
        """Transport all blocks back to integral component matrices of ``A``."""
        Pinv = self.V.frame.P_inverse
        Q = self.U.frame.P
        parts = list(self.u_part) + list(self.ubar_part)
        comps = []
        for k in range(2 * self.d):
            acc = ExactMatrix.zeros(2 * self.m, 2 * self.m)
            for j, mat in enumerate(parts):
                if Q[k, j]:
                    acc = acc + mat.scale(Q[k, j])
            comps.append(Pinv.T @ acc @ Pinv)
        return comps


def _bilinear(mat, x, y):
    acc = ZERO
    for i in range(mat.rows):
        if not x[i]:
            continue
        inner = ZERO
        for j in range(mat.cols):
            if mat[i, j] and y[j]:
                inner = inner + mat[i, j] * y[j]
        acc = acc + x[i] * inner
    return acc


def _check_dims(form, V, U):
    if V.ambient_rank != 2 * form.m or V.dim != form.m:
        raise DimensionError(f"V must be an {form.m}-dimensional subspace of C^{2 * form.m}")
    if U.ambient_rank != 2 * form.d or U.dim != form.d:
        raise DimensionError(f"U must be a {form.d}-dimensional subspace of C^{2 * form.d}")


def decompose(form, V, U):
    _check_dims(form, V, U)
    P = V.frame.P
    Qinv = U.frame.P_inverse
    transported = [P.T @ mat @ P for mat in form.matrices()]
    parts = []
    for j in range(2 * form.d):
        acc = ExactMatrix.zeros(2 * form.m, 2 * form.m)
        for k, mat in enumerate(transported):
            if Qinv[j, k]:
                acc = acc + mat.scale(Qinv[j, k])
        parts.append(acc)
    return BilinearDecomposition(
        form=form, V=V, U=U, u_part=tuple(parts[: form.d]), ubar_part=tuple(parts[form.d:])
    )


def check_riemann(decomp):
    return all(mat.is_zero() for mat in decomp.Bbar_VV)


def bracket_closure_oracle(form, V, U):
    """Integrability through brackets: ``A(v, v')`` must lie in ``U`` for all
    basis vectors ``v, v'`` of ``V``.  Works with the raw form and a span
    test, never with the decomposition."""
    _check_dims(form, V, U)
    vs = V.vectors()
    u_vectors = U.vectors()
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            if not span_contains(u_vectors, form.value(vs[a], vs[b])):
                return False
    return True


@dataclass(frozen=True)
class HermitianSystem:
    """``D_k = i * Omega^T A_k conj(Omega)``, one Hermitian matrix per Lambda-coordinate."""

    D: tuple

    def is_zero(self):
        return all(mat.is_zero() for mat in self.D)

    def is_hermitian(self):
        return all(mat == mat.H for mat in self.D)


def hermitian_system(form, V):
    if V.ambient_rank != 2 * form.m:
        raise DimensionError("V does not live in Gamma (x) C")
    omega = V.basis
    mats = tuple((omega.T @ mat @ omega.conj()).scale(I) for mat in form.matrices())
    system = HermitianSystem(mats)
    assert system.is_hermitian()
    return system


def discriminant_form(system, names=None):
    """``det(sum_k lambda_k D_k)`` as a homogeneous polynomial with real coefficients."""
    count = len(system.D)
    if not count:
        raise DimensionError("empty Hermitian system")
    names = names or tuple(f"lambda{k + 1}" for k in range(count))
    size = system.D[0].rows
    grid = [
        [Polynomial.linear([mat[i, j] for mat in system.D], names) for j in range(size)]
        for i in range(size)
    ]
    det = poly_determinant(grid)
    if not det.has_real_coefficients():
        raise AssertionError("determinant of a Hermitian pencil has non-real coefficients")
    return det


def require_riemann(decomp):
    if not check_riemann(decomp):
        raise PreconditionError("the Riemann relation fails for this (V, U)")


def cocycle(decomp, gamma, v):
    """``F_gamma(v) = B'(v, g) + 2 B''(v, conj g) + B''(g, conj g)`` with ``g = p_V(gamma)``;
    returned in U-coordinates."""
    require_riemann(decomp)
    if len(gamma) != 2 * decomp.m or len(v) != decomp.m:
        raise DimensionError("gamma must lie in Gamma and v in V-coordinates")
    g = decomp.V.coordinates(gamma)[0]
    gbar = [t.conj() for t in g]
    first = decomp.bprime(v, g)
    second = decomp.bdoubleprime(v, gbar)
    third = decomp.bdoubleprime(g, gbar)
    return [a + 2 * b + c for a, b, c in zip(first, second, third)]
