"""The real nilpotent group ``Pi (x) R`` on ``(Lambda (x) R) + (Gamma (x) R)``.

Two charts are used.

*Triangular chart* ``(y, x)``: the product is

    (y, x)(y', x') = (y + y' + T-(x, x'), x + x')

with ``T-`` the strictly lower triangular part of ``A``.

*Symmetric chart* ``(eta, x)`` with ``eta = 2 (y + S(x, x))``: the product
becomes ``(eta + eta' + A(x, x'), x + x')``, the lattice acts by
``(eta, x) . gamma = (eta + A(x, gamma) + 2 S(gamma, gamma), x + gamma)``,
right-invariant ``(1,0)`` vectors are ``(u + A(v, x), v)``.  The
trivialisation ``Psi`` identifies the group with ``U + V``.

All points are rational; tangent vectors live in ``(Lambda + Gamma) (x) Q(i)``
and are lists with the ``2d`` Lambda-coordinates first.
"""

from dataclasses import dataclass
from fractions import Fraction

from .appell_humbert import require_riemann
from .errors import DimensionError, DomainError
from .lattice import triangular_splitting
from .matrix import same_span
from .scalars import GaussianRational, ZERO

__all__ = [
    "GroupElement",
    "identity",
    "group_multiply",
    "group_inverse",
    "to_symmetric",
    "from_symmetric",
    "symmetric_multiply",
    "symmetric_inverse",
    "lattice_lift",
    "lattice_action",
    "t10_fiber",
    "right_translation_differential",
    "inversion_differential",
    "inversion_preserves_t10",
    "psi",
    "psi_inverse",
    "conjugated_right_action",
]


def _frac(value):
    if isinstance(value, GaussianRational):
        return value.to_rational()
    return Fraction(value)


def _real(values):
    return tuple(_frac(v) for v in values)


@dataclass(frozen=True)
class GroupElement:
    """A rational point ``(y, x)`` with ``y`` in ``Lambda (x) Q`` and ``x`` in ``Gamma (x) Q``."""

    y: tuple
    x: tuple

    def __post_init__(self):
        object.__setattr__(self, "y", _real(self.y))
        object.__setattr__(self, "x", _real(self.x))


def identity(form):
    return GroupElement((0,) * (2 * form.d), (0,) * (2 * form.m))


def _add(*vectors):
    return tuple(sum(parts, Fraction(0)) for parts in zip(*vectors))


def _scale(c, vector):
    return tuple(c * t for t in vector)


def _rational_value(values):
    return tuple(v.to_rational() for v in values)


def _check(form, g):
    if len(g.y) != 2 * form.d or len(g.x) != 2 * form.m:
        raise DimensionError("group element does not match the form's dimensions")


def group_multiply(g, h, split):
    t = _rational_value(split.tminus_value(g.x, h.x))
    return GroupElement(_add(g.y, h.y, t), _add(g.x, h.x))


def group_inverse(g, split):
    s = _rational_value(split.s_value(g.x, g.x))
    return GroupElement(_add(_scale(-1, g.y), _scale(-2, s)), _scale(-1, g.x))


def to_symmetric(g, split):
    """``(y, x) -> (2 (y + S(x, x)), x)``."""
    s = _rational_value(split.s_value(g.x, g.x))
    return GroupElement(_scale(2, _add(g.y, s)), g.x)


def from_symmetric(p, split):
    s = _rational_value(split.s_value(p.x, p.x))
    return GroupElement(_add(_scale(Fraction(1, 2), p.y), _scale(-1, s)), p.x)


def symmetric_multiply(p, q, form):
    a = _rational_value(form.value(p.x, q.x))
    return GroupElement(_add(p.y, q.y, a), _add(p.x, q.x))


def symmetric_inverse(p):
    return GroupElement(_scale(-1, p.y), _scale(-1, p.x))


def _integral(gamma):
    out = []
    for t in gamma:
        t = _frac(t)
        if t.denominator != 1:
            raise DomainError(f"lattice vector has non-integral entry {t}")
        out.append(int(t))
    return tuple(out)


def lattice_lift(gamma, split):
    """The lift of ``gamma`` in the symmetric chart, ``(2 S(gamma, gamma), gamma)``."""
    gamma = _integral(gamma)
    two_s = _scale(2, _rational_value(split.s_value(gamma, gamma)))
    if any(t.denominator != 1 for t in two_s):
        raise AssertionError("2 S(gamma, gamma) is not in Lambda")
    return GroupElement(two_s, gamma)


def lattice_action(p, gamma, form, split=None):
    """Right action of the lifted lattice vector on a symmetric-chart point."""
    split = split or triangular_splitting(form)
    _check(form, p)
    lift = lattice_lift(gamma, split)
    a = _rational_value(form.value(p.x, lift.x))
    return GroupElement(_add(p.y, a, lift.y), _add(p.x, lift.x))


# tangent spaces


def _vec(values):
    return [GaussianRational.coerce(v) for v in values]


def _sym_to_triangular_tangent(x, split, vector, d):
    """Differential of the chart change ``(eta, x) -> (y, x)`` at base point ``x``."""
    dy, dx = vector[: 2 * d], vector[2 * d:]
    four_s = [4 * t for t in split.s_value(x, dx)]
    return [(a - b) / 2 for a, b in zip(dy, four_s)] + list(dx)


def t10_fiber(decomp, g, chart="symmetric", split=None):
    """Spanning vectors of ``T^(1,0)`` at ``g``: ``(u_j, 0)`` and ``(A(v_i, x), v_i)``
    in the symmetric chart, transported to the triangular chart on request."""
    require_riemann(decomp)
    form = decomp.form
    _check(form, g)
    x = _vec(g.x)
    zeros_gamma = [ZERO] * (2 * form.m)
    vectors = [list(u) + zeros_gamma for u in decomp.U.vectors()]
    for v in decomp.V.vectors():
        vectors.append(list(form.value(v, x)) + list(v))
    if chart == "symmetric":
        return vectors
    if chart != "triangular":
        raise ValueError(f"unknown chart {chart!r}")
    split = split or triangular_splitting(form)
    return [_sym_to_triangular_tangent(x, split, vec, form.d) for vec in vectors]


def right_translation_differential(h, vector, form, chart="symmetric", split=None):
    """``d(R_h)`` applied to a tangent vector; it does not depend on the base point."""
    _check(form, h)
    d = form.d
    dy, dx = _vec(vector[: 2 * d]), _vec(vector[2 * d:])
    if chart == "symmetric":
        extra = form.value(dx, h.x)
    elif chart == "triangular":
        split = split or triangular_splitting(form)
        extra = split.tminus_value(dx, h.x)
    else:
        raise ValueError(f"unknown chart {chart!r}")
    return [a + b for a, b in zip(dy, extra)] + dx


def inversion_differential(g, vector, form, split=None):
    """Differential at ``g`` of ``(y, x) -> (-y - 2 S(x, x), -x)`` (triangular chart)."""
    split = split or triangular_splitting(form)
    d = form.d
    dy, dx = _vec(vector[: 2 * d]), _vec(vector[2 * d:])
    four_s = [4 * t for t in split.s_value(g.x, dx)]
    return [-a - b for a, b in zip(dy, four_s)] + [-t for t in dx]


def inversion_preserves_t10(decomp, g, split=None):
    """Whether ``D(i)_g`` maps ``T^(1,0)_g`` onto ``T^(1,0)_{g^-1}`` (triangular chart)."""
    form = decomp.form
    split = split or triangular_splitting(form)
    fiber = t10_fiber(decomp, g, "triangular", split)
    pushed = [inversion_differential(g, vec, form, split) for vec in fiber]
    target = t10_fiber(decomp, group_inverse(g, split), "triangular", split)
    return same_span(pushed, target)


# the holomorphic trivialisation Psi : Pi (x) R -> U + V


def _real_part_twice(vector):
    """``w + conj(w)`` as a rational vector."""
    return tuple(2 * t.re for t in vector)


def psi(decomp, p):
    """``Psi(eta, x) = (p_U(eta) - B''(conj x_V, x_V), x_V)`` on a symmetric-chart point,
    with ``B''(conj w, w) = -B''(w, conj w)``."""
    require_riemann(decomp)
    _check(decomp.form, p)
    x_v = decomp.V.coordinates(_vec(p.x))[0]
    eta_u = decomp.U.coordinates(_vec(p.y))[0]
    correction = decomp.bdoubleprime(x_v, [t.conj() for t in x_v])
    return [a + b for a, b in zip(eta_u, correction)], x_v


def psi_inverse(decomp, u, v):
    """``(u, v) -> (u + conj u + B''(conj v, v) + conj(...), v + conj v)``."""
    require_riemann(decomp)
    u, v = _vec(u), _vec(v)
    b = decomp.bdoubleprime(v, [t.conj() for t in v])
    fiber_coords = [a - c for a, c in zip(u, b)]
    eta = decomp.U.basis.apply(fiber_coords)
    x = decomp.V.basis.apply(v)
    return GroupElement(_real_part_twice(eta), _real_part_twice(x))


def conjugated_right_action(decomp, g, u, v):
    """``Psi o R_g o Psi^{-1}`` evaluated at ``(u, v)`` for a symmetric-chart point ``g``."""
    point = psi_inverse(decomp, u, v)
    return psi(decomp, symmetric_multiply(point, g, decomp.form))
