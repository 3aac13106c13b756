"""Cohomological invariants of ``X`` and deformation verdicts for the
Appell-Humbert family at a point ``(V, U)``.

Everything here is a rank computation on small matrices built from the
blocks ``B'`` and ``B''`` of a :class:`~torusbundle.appell_humbert.BilinearDecomposition`.
Coordinates: ``v_a`` is the a-th basis vector of ``V``, ``conj v_a`` that of
``conj V``; ``u_p``, ``conj u_p`` likewise for ``U``, and dual bases carry
the same indices.
"""

from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb

from .appell_humbert import require_riemann
from .errors import DimensionError, PreconditionError
from .matrix import ExactMatrix, kernel_basis, rank, solve
from .scalars import GaussianRational, ZERO

__all__ = [
    "CohomologyReport",
    "DeformationReport",
    "h0_omega1_coker",
    "closed_forms_coker",
    "h1_O",
    "h2_O",
    "tangent_map_G",
    "ks_surjectivity",
    "kernel_of_F_conditions",
    "degenerate_first_factor",
    "cohomology_report",
    "deformation_report",
]

KS_CASES = ("i", "ii", "iii", "iv")


def _matrix(rows, ncols):
    return ExactMatrix(rows, cols=ncols) if rows else ExactMatrix.zeros(0, ncols)


def _bprime_matrix(decomp):
    """``Lambda^2 V -> U``: rows ``a < b``, columns ``p``, entries ``B'_p(v_a, v_b)``."""
    pairs = list(combinations(range(decomp.m), 2))
    return _matrix([[mat[a, b] for mat in decomp.Bprime] for a, b in pairs], decomp.d)


def h0_omega1_coker(decomp):
    """Dimension of ``{xi in U^* : xi o B'' = 0}``."""
    require_riemann(decomp)
    m = decomp.m
    rows = [[mat[a, b] for mat in decomp.Bdoubleprime] for a in range(m) for b in range(m)]
    return decomp.d - rank(_matrix(rows, decomp.d))


def closed_forms_coker(decomp):
    """Dimension of the annihilator in ``U^*`` of the whole image of ``B`` (both blocks)."""
    require_riemann(decomp)
    m = decomp.m
    rows = [[mat[a, b] for mat in decomp.Bprime] for a in range(m) for b in range(m)]
    rows += [[mat[a, b] for mat in decomp.Bdoubleprime] for a in range(m) for b in range(m)]
    return decomp.d - rank(_matrix(rows, decomp.d))


def _bprime_bar_rank(decomp):
    # conj B' : conj(U)^* -> Lambda^2 conj(V)^* has the conjugate matrix, same rank
    return rank(_bprime_matrix(decomp))


def h1_O(decomp):
    """``m + dim Ker(conj B' : conj(U)^* -> Lambda^2 conj(V)^*)``."""
    require_riemann(decomp)
    return decomp.m + decomp.d - _bprime_bar_rank(decomp)


def _bbar_forms(decomp):
    """``conj B'_p`` as dictionaries ``{(a, b): value}`` over ``a < b``."""
    return [
        {(a, b): mat[a, b].conj() for a, b in combinations(range(decomp.m), 2)}
        for mat in decomp.Bprime
    ]


def _e3_11_matrix(decomp):
    """``conj(U)^* (x) conj(V)^* -> Lambda^3 conj(V)^*``, ``xi_p (x) e_c -> conj B'_p ^ e_c``."""
    m, d = decomp.m, decomp.d
    forms = _bbar_forms(decomp)
    triples = list(combinations(range(m), 3))
    columns = []
    for p in range(d):
        beta = forms[p]
        for c in range(m):
            col = []
            for i, j, k in triples:
                if c == k:
                    col.append(beta[(i, j)])
                elif c == j:
                    col.append(-beta[(i, k)])
                elif c == i:
                    col.append(beta[(j, k)])
                else:
                    col.append(ZERO)
            columns.append(col)
    if not triples:
        return ExactMatrix.zeros(0, d * m)
    return ExactMatrix.from_columns(columns)


def _e3_02_matrix(decomp):
    """``Lambda^2 conj(U)^* -> conj(U)^* (x) Lambda^2 conj(V)^*`` by contraction with ``conj B'``:
    ``xi_p ^ xi_q -> xi_q (x) conj B'_p - xi_p (x) conj B'_q``."""
    m, d = decomp.m, decomp.d
    forms = _bbar_forms(decomp)
    pairs_u = list(combinations(range(d), 2))
    pairs_v = list(combinations(range(m), 2))
    columns = []
    for p, q in pairs_u:
        col = []
        for s in range(d):
            for ab in pairs_v:
                value = ZERO
                if s == q:
                    value = value + forms[p][ab]
                if s == p:
                    value = value - forms[q][ab]
                col.append(value)
        columns.append(col)
    if not columns:
        return ExactMatrix.zeros(d * len(pairs_v), 0)
    return ExactMatrix.from_columns(columns, rows=d * len(pairs_v))


def h2_O(decomp):
    """``(h2, E3_02, E3_20, E3_11)`` from the degenerate Leray spectral sequence."""
    require_riemann(decomp)
    m, d = decomp.m, decomp.d
    M02 = _e3_02_matrix(decomp)
    e02 = M02.cols - rank(M02)
    e20 = comb(m, 2) - _bprime_bar_rank(decomp)
    M11 = _e3_11_matrix(decomp)
    e11 = M11.cols - rank(M11)
    return e02 + e20 + e11, e02, e20, e11


def tangent_map_G(decomp):
    """The linearised Riemann relation

        G(L, M)(v, v') = conj(M B'(v, v')) - B''(conj(L v), conj v') + B''(conj(L v'), conj v)

    from ``Hom(V, conj V) + Hom(U, conj U)`` to ``Hom(Lambda^2 V, U)``.

    ``G`` is conjugate-linear; the matrix returned is its matrix in the
    conjugated parameters ``conj(l[c][a])`` (where ``L v_a = sum_c l[c][a] conj v_c``)
    followed by ``conj(mu[q][p])`` (``M u_p = sum_q mu[q][p] conj u_q``).
    Rows are indexed by ``(j, a < b)``.  Returns ``(matrix, rank)``.
    """
    require_riemann(decomp)
    m, d = decomp.m, decomp.d
    pairs = list(combinations(range(m), 2))
    Bp = decomp.Bprime
    Bpp = decomp.Bdoubleprime
    rows = []
    for j in range(d):
        for a, b in pairs:
            row = []
            for c in range(m):
                for col in range(m):
                    # coefficient of conj(l[c][col])
                    value = ZERO
                    if col == a:
                        value = value - Bpp[j][c, b]
                    if col == b:
                        value = value + Bpp[j][c, a]
                    row.append(value)
            for q in range(d):
                for p in range(d):
                    row.append(Bp[p][a, b].conj() if q == j else ZERO)
            rows.append(row)
    G = _matrix(rows, m * m + d * d)
    return G, rank(G)


def degenerate_first_factor(decomp):
    """A nonzero ``v`` (V-coordinates) with ``B(v, .) = 0`` on ``Gamma (x) C``, or ``None``."""
    require_riemann(decomp)
    m = decomp.m
    rows = []
    for block in (decomp.Bprime, decomp.Bdoubleprime):
        for mat in block:
            for b in range(m):
                rows.append([mat[a, b] for a in range(m)])
    kernel = kernel_basis(_matrix(rows, m))
    return kernel[0] if kernel else None


def ks_case_flags(decomp):
    """Evaluate the four sufficient conditions for surjectivity of Kodaira-Spencer."""
    require_riemann(decomp)
    d = decomp.d
    bprime_rank = _bprime_bar_rank(decomp)
    bprime_nonzero = any(not mat.is_zero() for mat in decomp.Bprime)
    return {
        "i": bprime_rank == d,
        "ii": d == 1 and bprime_nonzero,
        "iii": d == 1 and degenerate_first_factor(decomp) is None,
        "iv": decomp.is_parallelizable() and bprime_rank == d,
    }


def ks_surjectivity(decomp):
    """First satisfied case among i]..iv], or ``"none"``.

    For ``d = 1`` cases i] and ii] are the same condition; it is reported as ii].
    """
    flags = ks_case_flags(decomp)
    for case in KS_CASES:
        if flags[case]:
            if case == "i" and decomp.d == 1:
                return "ii"
            return case
    return "none"


def _as_scalars(values, length, what):
    values = [GaussianRational.coerce(v) for v in values]
    if len(values) != length:
        raise DimensionError(f"{what} must have {length} entries")
    return values


def kernel_of_F_conditions(decomp, L, tensor):
    """The two membership conditions describing ``Ker F``.

    ``L`` is the ``m x m`` matrix of a map ``V -> conj V`` (column ``a`` holds
    the ``conj V``-coordinates of ``L v_a``).  ``tensor`` is a list of pairs
    ``(v_i, xi_i)``: ``v_i`` in V-coordinates, ``xi_i`` in ``conj(U)^*``
    coordinates, each ``xi_i`` required to lie in ``Ker(conj B')``.

    Returns ``(condition_1, condition_2)``.
    """
    require_riemann(decomp)
    m, d = decomp.m, decomp.d
    L = ExactMatrix(L)
    if L.shape != (m, m):
        raise DimensionError(f"L must be {m}x{m}")
    forms = _bbar_forms(decomp)
    pairs = list(combinations(range(m), 2))
    cleaned = []
    for v, xi in tensor:
        v = _as_scalars(v, m, "v_i")
        xi = _as_scalars(xi, d, "xi_i")
        for ab in pairs:
            if sum((xi[p] * forms[p][ab] for p in range(d)), ZERO):
                raise PreconditionError("tensor factor is not in Ker(conj B')")
        cleaned.append((v, xi))

    # 1) B''(conj L) = Mbar o conj B' on Lambda^2 conj V for some Mbar : conj U -> U.
    # conj(L) conj(v_a) = sum_c conj(l[c][a]) v_c
    Lbar = L.conj()
    Bpp = decomp.Bdoubleprime
    lhs = []
    coefficient_rows = []
    for j in range(d):
        for a, b in pairs:
            value = ZERO
            for c in range(m):
                value = value + Lbar[c, a] * Bpp[j][c, b] - Lbar[c, b] * Bpp[j][c, a]
            lhs.append(value)
            # unknowns Mbar[j][p], flattened as j * d + p
            row = [ZERO] * (d * d)
            for p in range(d):
                row[j * d + p] = forms[p][(a, b)]
            coefficient_rows.append(row)
    if coefficient_rows:
        condition_1 = solve(_matrix(coefficient_rows, d * d), lhs) is not None
    else:
        condition_1 = True

    # 2) sum_i B''(v_i) (x) xi_i = 0 in U (x) conj(V)^* (x) conj(U)^*
    condition_2 = True
    for j in range(d):
        for b in range(m):
            for p in range(d):
                total = ZERO
                for v, xi in cleaned:
                    if xi[p]:
                        total = total + xi[p] * sum((v[a] * Bpp[j][a, b] for a in range(m)), ZERO)
                if total:
                    condition_2 = False
    return condition_1, condition_2


@dataclass(frozen=True)
class CohomologyReport:
    h0_omega1: int
    h0_closed_coker: int
    h0_closed: int
    h1_O: int
    h2_O: int
    E3_02: int
    E3_20: int
    E3_11: int
    parallelizable: bool

    def to_json(self):
        return asdict(self)

    @classmethod
    def from_json(cls, data):
        return cls(**data)


@dataclass(frozen=True)
class DeformationReport:
    G_rank: int
    G_target_dim: int
    tangent_dim_TB: int
    tangent_dim_complete: int
    smooth: bool
    ks_surjective_case: str
    ks_cases: dict = field(default_factory=dict)
    not_kaehler: bool = False

    def to_json(self):
        return asdict(self)

    @classmethod
    def from_json(cls, data):
        return cls(**data)


def cohomology_report(decomp):
    m = decomp.m
    coker = h0_omega1_coker(decomp)
    closed = closed_forms_coker(decomp)
    h2, e02, e20, e11 = h2_O(decomp)
    return CohomologyReport(
        h0_omega1=m + coker,
        h0_closed_coker=closed,
        h0_closed=m + closed,
        h1_O=h1_O(decomp),
        h2_O=h2,
        E3_02=e02,
        E3_20=e20,
        E3_11=e11,
        parallelizable=decomp.is_parallelizable(),
    )


def deformation_report(decomp):
    m, d = decomp.m, decomp.d
    _, g_rank = tangent_map_G(decomp)
    target = d * comb(m, 2)
    tangent = m * m + d * d - g_rank
    form_zero = decomp.form.is_zero()
    return DeformationReport(
        G_rank=g_rank,
        G_target_dim=target,
        tangent_dim_TB=tangent,
        tangent_dim_complete=tangent + m * d,
        # with A = 0 there are no equations at all
        smooth=form_zero or g_rank == target,
        ks_surjective_case=ks_surjectivity(decomp),
        ks_cases=ks_case_flags(decomp),
        not_kaehler=not form_zero,
    )
