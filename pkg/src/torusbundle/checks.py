"""Randomised verification of the group-model identities, used by ``group-check``."""

import random
from dataclasses import dataclass
from fractions import Fraction

from .appell_humbert import cocycle, require_riemann
from .group import (
    GroupElement,
    conjugated_right_action,
    from_symmetric,
    group_inverse,
    group_multiply,
    identity,
    inversion_preserves_t10,
    lattice_action,
    lattice_lift,
    psi,
    psi_inverse,
    right_translation_differential,
    symmetric_multiply,
    t10_fiber,
    to_symmetric,
)
from .lattice import triangular_splitting
from .matrix import same_span, span_contains
from .scalars import GaussianRational

__all__ = ["LawResult", "random_rational", "random_element", "random_lattice_vector", "run_group_checks"]


@dataclass(frozen=True)
class LawResult:
    name: str
    passed: int
    total: int

    @property
    def ok(self):
        return self.passed == self.total

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "total": self.total, "ok": self.ok}


def random_rational(rng, bound=6, denominator=4):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, denominator))


def random_element(form, rng):
    return GroupElement(
        [random_rational(rng) for _ in range(2 * form.d)],
        [random_rational(rng) for _ in range(2 * form.m)],
    )


def random_lattice_vector(form, rng, bound=3):
    return tuple(rng.randint(-bound, bound) for _ in range(2 * form.m))


def _random_gaussian(rng):
    return GaussianRational(random_rational(rng), random_rational(rng))


def _inversion_oracle(decomp, g):
    """Inversion is holomorphic at ``g`` iff every ``A(v, x)`` lies in ``U``."""
    u_vectors = decomp.U.vectors()
    return all(span_contains(u_vectors, decomp.form.value(v, g.x)) for v in decomp.V.vectors())


def run_group_checks(decomp, samples=100, seed=0):
    """Check every group-model identity on ``samples`` random points.

    Returns a list of :class:`LawResult`.  The inversion law compares the
    tangent computation with a direct membership test; the number of points
    where inversion fails to be holomorphic is reported separately.
    """
    require_riemann(decomp)
    rng = random.Random(seed)
    form = decomp.form
    split = triangular_splitting(form)
    e = identity(form)
    counts = {}

    def record(name, ok):
        passed, total = counts.get(name, (0, 0))
        counts[name] = (passed + bool(ok), total + 1)

    non_holomorphic = 0
    for _ in range(samples):
        g, h, k = (random_element(form, rng) for _ in range(3))
        record("associativity", group_multiply(group_multiply(g, h, split), k, split)
               == group_multiply(g, group_multiply(h, k, split), split))
        record("identity", group_multiply(g, e, split) == g == group_multiply(e, g, split))
        g_inv = group_inverse(g, split)
        record("inverse", group_multiply(g, g_inv, split) == e == group_multiply(g_inv, g, split))
        record("inverse of product", group_inverse(group_multiply(g, h, split), split)
               == group_multiply(group_inverse(h, split), g_inv, split))
        record("chart change", from_symmetric(to_symmetric(g, split), split) == g
               and to_symmetric(group_multiply(g, h, split), split)
               == symmetric_multiply(to_symmetric(g, split), to_symmetric(h, split), form))

        p = to_symmetric(g, split)
        gamma, delta = random_lattice_vector(form, rng), random_lattice_vector(form, rng)
        twice = lattice_action(lattice_action(p, gamma, form, split), delta, form, split)
        once = lattice_action(p, tuple(a + b for a, b in zip(gamma, delta)), form, split)
        record("lattice action composition mod Lambda",
               twice.x == once.x and all((a - b).denominator == 1 for a, b in zip(twice.y, once.y)))

        u, x_v = psi(decomp, p)
        record("psi round trip on the group", psi_inverse(decomp, u, x_v) == p)
        u0 = [_random_gaussian(rng) for _ in range(form.d)]
        v0 = [_random_gaussian(rng) for _ in range(form.m)]
        record("psi round trip on U + V", psi(decomp, psi_inverse(decomp, u0, v0)) == (u0, v0))

        q = to_symmetric(h, split)
        y_u = decomp.U.coordinates(list(q.y))[0]
        x_q = decomp.V.coordinates(list(q.x))[0]
        xbar = [t.conj() for t in x_q]
        first = decomp.bprime(v0, x_q)
        second = decomp.bdoubleprime(v0, xbar)
        third = decomp.bdoubleprime(x_q, xbar)
        expected_u = [a + b + c + 2 * s + t for a, b, c, s, t in zip(y_u, u0, first, second, third)]
        expected = (expected_u, [a + b for a, b in zip(x_q, v0)])
        record("conjugated right action", conjugated_right_action(decomp, q, u0, v0) == expected)

        lift = lattice_lift(gamma, split)
        shift = decomp.U.coordinates([GaussianRational(t) for t in lift.y])[0]
        f = cocycle(decomp, gamma, v0)
        got = conjugated_right_action(decomp, lift, u0, v0)[0]
        record("cocycle of a lattice lift",
               got == [a + b + c for a, b, c in zip(u0, f, shift)])

        pushed = [right_translation_differential(q, vec, form) for vec in t10_fiber(decomp, p)]
        record("right invariance of T10",
               same_span(pushed, t10_fiber(decomp, symmetric_multiply(p, q, form))))

        preserved = inversion_preserves_t10(decomp, g, split)
        record("inversion differential vs membership oracle", preserved == _inversion_oracle(decomp, g))
        non_holomorphic += not preserved

    results = [LawResult(name, *counts[name]) for name in counts]
    return results, non_holomorphic
